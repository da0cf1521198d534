#ifndef ORBIHOM_VERIFY_HPP
#define ORBIHOM_VERIFY_HPP

// Executable verdicts on concrete inputs. Every check returns a report whose
// overall verdict is the conjunction of its assertions; each check also has
// an overload taking precomputed components so that negative controls can
// feed it deliberately wrong data.

#include "orbihom/chain_complex.hpp"
#include "orbihom/intlin.hpp"
#include "orbihom/orbmodel.hpp"

#include <string>
#include <vector>

namespace orbihom {

struct Assertion
{
    std::string statement;
    std::string left;
    std::string right;
    bool passed = false;
};

struct VerdictReport
{
    std::string check;
    std::string input;
    std::vector<std::string> notes;
    std::vector<Assertion> assertions;

    bool passed() const;
    std::size_t failures() const;

    void add(std::string statement, std::string left, std::string right, bool passed);
    void add_equal(std::string statement, FgAbGroup const& left, FgAbGroup const& right);

    /// One line per assertion, then "RESULT PASS|FAIL".
    std::string to_text() const;
    /// Stable key order: check, input, passed, notes, assertions.
    std::string to_json() const;
};

// ---------------------------------------------------------------- exactness

struct Exactness
{
    bool exact = false;
    FgAbGroup image;  // im f, as an abstract group
    FgAbGroup kernel; // ker g
};

/// X -f-> Y -g-> Z, decided in the generator coordinates of Y's
/// presentation: im f + R_Y against ker g + R_Y, containment both ways.
Exactness exactness_at(GroupHom const& f, GroupHom const& g);

/// The long exact sequence of a two-set cover, per degree q in [0, n].
struct MvSequence
{
    std::vector<FgAbGroup> h_intersection;
    std::vector<FgAbGroup> h_parts; // H_q(A) + H_q(B)
    std::vector<FgAbGroup> h_whole;
    std::vector<GroupHom> i; // H_q(A n B) -> H_q(A) + H_q(B)
    std::vector<GroupHom> j; // H_q(A) + H_q(B) -> H_q(M)
    std::vector<GroupHom> k; // H_q(M) -> H_{q-1}(A n B)
};

MvSequence mv_sequence(MayerVietorisData const& mv);

/// 3(n+1) exactness assertions.
VerdictReport check_mv(std::string const& input, MvSequence const& seq);
VerdictReport check_mv(ChainComplex const& m, LabelSet const& a, LabelSet const& b, std::string const& input);
VerdictReport check_mv(WeightedCellComplex const& m, LabelSet const& a, LabelSet const& b);

// ---------------------------------------------------------------- Kunneth

/// Closed form sum_i H_i(M) (x) H_{q-i}(T^k) for free torus homology.
std::vector<FgAbGroup> kunneth_torus_product(std::vector<FgAbGroup> const& base, int k);

VerdictReport check_kunneth(std::string const& input, std::vector<FgAbGroup> const& product,
                            std::vector<FgAbGroup> const& base, int k);
VerdictReport check_kunneth(OrbifoldDesc const& d, int k);

// ---------------------------------------------------------------- rational

VerdictReport check_rational(std::string const& input, std::vector<FgAbGroup> const& t_integral,
                             std::vector<FgAbGroup> const& t_rational,
                             std::vector<FgAbGroup> const& underlying_rational);
VerdictReport check_rational(OrbifoldDesc const& d);

// ---------------------------------------------------------------- underlying

/// Homology of |M| from closed forms (disk, ball, surface, times torus).
std::vector<FgAbGroup> classical_homology(OrbifoldDesc const& d);

VerdictReport check_underlying(std::string const& input, std::vector<FgAbGroup> const& computed,
                               std::vector<FgAbGroup> const& reference);
VerdictReport check_underlying(OrbifoldDesc const& d);

// ---------------------------------------------------------------- Hurewicz

VerdictReport check_hurewicz(std::string const& input, FgAbGroup const& abelianized, FgAbGroup const& h1);
VerdictReport check_hurewicz(OrbifoldDesc const& d);

// ---------------------------------------------------------------- b-homotopy

VerdictReport check_bhomotopy_pair(std::string const& input, std::vector<FgAbGroup> const& a,
                                   std::vector<FgAbGroup> const& b);
VerdictReport check_bhomotopy_pair(OrbifoldDesc const& a, OrbifoldDesc const& b);

// ---------------------------------------------------------------- duality

struct DualityData
{
    int n = 0;
    std::vector<FgAbGroup> ws;       // ws-H^q(M)
    std::vector<FgAbGroup> ws_rel;   // ws-H^q(M, dM)
    std::vector<FgAbGroup> t;        // t-H_q(M)
    std::vector<FgAbGroup> t_rel;    // t-H_q(M, dM)
};

DualityData duality_data(OrbifoldDesc const& d);

/// 2(n+1) assertions: ws-H^q(M) = t-H_{n-q}(M, dM) and
/// ws-H^{n-q}(M, dM) = t-H_q(M).
VerdictReport check_duality(std::string const& input, DualityData const& data);
VerdictReport check_duality(OrbifoldDesc const& d);

} // namespace orbihom

#endif
