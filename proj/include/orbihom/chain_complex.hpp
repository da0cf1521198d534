#ifndef ORBIHOM_CHAIN_COMPLEX_HPP
#define ORBIHOM_CHAIN_COMPLEX_HPP

#include "orbihom/intlin.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orbihom {

/// Finite free chain complex C_0 <- C_1 <- ... <- C_n over Z. Every degree in
/// [0, n] carries an explicit (possibly empty) labelled basis; boundary(q) has
/// rank(q-1) rows and rank(q) columns.
class ChainComplex
{
public:
    ChainComplex() = default;
    ChainComplex(std::vector<std::vector<std::string>> bases, std::vector<IntMatrix> boundaries);

    /// The complex with a single 0-cell.
    static ChainComplex point(std::string label = "pt");
    /// One 0-cell and one 1-cell with zero boundary.
    static ChainComplex circle(std::string const& prefix = "s");

    int top_dim() const { return static_cast<int>(bases_.size()) - 1; }
    std::size_t rank(int q) const;
    std::vector<std::string> const& basis(int q) const;
    /// Zero-sized or zero matrices outside [1, n].
    IntMatrix boundary(int q) const;

    std::optional<std::size_t> index_of(int q, std::string const& label) const;
    /// Degree of a label, searching all degrees.
    std::optional<int> degree_of(std::string const& label) const;

    ChainComplex with_labels(std::vector<std::vector<std::string>> bases) const;

private:
    std::vector<std::vector<std::string>> bases_;
    std::vector<IntMatrix> boundaries_; // index q holds d_q, q in [1, n]; [0] unused
};

struct BoundaryViolation
{
    int degree = 0;          // q where d_{q-1} d_q != 0
    std::string face_label;  // (q-2)-cell
    std::string cell_label;  // q-cell
    Integer value;
    std::string message;
};

/// std::nullopt when every composite d_{q-1} d_q vanishes.
std::optional<BoundaryViolation> validate(ChainComplex const& c);

enum class Coefficients { Z, Q };

/// Homology of one degree with explicit generators and the change-of-basis
/// data needed to express an arbitrary cycle in summand coordinates.
struct DegreeHomology
{
    FgAbGroup group;
    std::vector<IntVector> generators; // torsion summands first, then free
    IntMatrix cycle_test;              // d_q, for cycle checks
    IntMatrix to_kernel;               // cycle -> kernel-basis coordinates
    IntMatrix to_summands;             // kernel coordinates -> summand coordinates
    IntVector moduli;                  // per summand: divisor, or 0 for free
};

class HomologyResult
{
public:
    HomologyResult() = default;
    HomologyResult(Coefficients coeff, std::vector<DegreeHomology> degrees);

    Coefficients coefficients() const { return coeff_; }
    int top_dim() const { return static_cast<int>(degrees_.size()) - 1; }
    /// Trivial group outside [0, n].
    FgAbGroup group(int q) const;
    std::vector<FgAbGroup> groups() const;
    DegreeHomology const& degree(int q) const;

    /// Coordinates of a cycle in the canonical summand basis, torsion
    /// coordinates reduced into [0, d). Throws if `cycle` is not a cycle.
    IntVector express(int q, IntVector const& cycle) const;

    AbPresentation presentation(int q) const;

private:
    Coefficients coeff_ = Coefficients::Z;
    std::vector<DegreeHomology> degrees_;
};

/// Rejects complexes failing validate().
HomologyResult homology(ChainComplex const& c, Coefficients coeff = Coefficients::Z);

/// Koszul-signed tensor product: d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
/// Labels are "<x>_x_<y>".
ChainComplex tensor(ChainComplex const& c, ChainComplex const& d);

/// Tensor power of circles, a cellular torus T^k (k = 0 gives a point).
ChainComplex torus(int k);

using LabelSet = std::set<std::string>;

/// First (face, cell) pair violating closure under faces, if any.
std::optional<std::pair<std::string, std::string>> find_open_face(ChainComplex const& c,
                                                                   LabelSet const& sub);

/// Quotient C / sub; sub must be closed under faces.
ChainComplex relative(ChainComplex const& c, LabelSet const& sub);

/// Restriction of C to a face-closed set of labels.
ChainComplex subcomplex(ChainComplex const& c, LabelSet const& cells);

struct ChainMap
{
    ChainComplex source;
    ChainComplex target;
    std::vector<IntMatrix> maps; // degree q: rank_target(q) x rank_source(q)

    IntMatrix at(int q) const;
    bool commutes() const;
};

ChainMap identity_map(ChainComplex const& c);
/// Inclusion of a subcomplex, matched by label.
ChainMap inclusion_map(ChainComplex const& sub, ChainComplex const& whole);

/// Per degree q in [0, max(n_source, n_target)], the homomorphism induced on
/// homology. Throws if a generator image is not a cycle.
std::vector<GroupHom> induced_map(ChainMap const& f, HomologyResult const& hc, HomologyResult const& hd);

/// Short exact sequence 0 -> C(A n B) -> C(A) + C(B) -> C(M) -> 0 with
/// i(c) = (c, -c) and j(a, b) = a + b.
struct MayerVietorisData
{
    ChainComplex whole;
    ChainComplex part_a;
    ChainComplex part_b;
    ChainComplex intersection;
    ChainMap incl_a; // A n B -> A
    ChainMap incl_b; // A n B -> B
    ChainMap proj_a; // A -> M
    ChainMap proj_b; // B -> M

    int top_dim() const { return whole.top_dim(); }
    /// Matrix of j in degree q: [J_A | J_B].
    IntMatrix j_matrix(int q) const;
    /// Matrix of i in degree q: [I_A ; -I_B].
    IntMatrix i_matrix(int q) const;
};

/// Builds the cellular Mayer-Vietoris data for a cover of M by two
/// face-closed label sets. Throws naming the first uncovered cell or open
/// face.
MayerVietorisData mayer_vietoris(ChainComplex const& whole, LabelSet const& a, LabelSet const& b);

/// Image of the cycle z in C_q(M) under the connecting map, expressed in
/// H_{q-1}(A n B). `preimage` overrides the deterministic choice of
/// (a, b) with a + b = z.
IntVector connecting_class(MayerVietorisData const& mv, HomologyResult const& h_intersection, int q,
                           IntVector const& z, std::optional<IntVector> const& preimage = std::nullopt);

/// k_*: H_q(M) -> H_{q-1}(A n B) for q in [0, n].
std::vector<GroupHom> connecting_hom(MayerVietorisData const& mv, HomologyResult const& h_intersection,
                                     HomologyResult const& h_whole);

/// Chain-level Euler characteristic sum (-1)^q rank C_q.
long euler_characteristic(ChainComplex const& c);

} // namespace orbihom

#endif
