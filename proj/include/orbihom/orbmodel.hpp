#ifndef ORBIHOM_ORBMODEL_HPP
#define ORBIHOM_ORBMODEL_HPP

// Finite weighted cellular models of the built-in orbifold families.
//
// The t-model places no cell on the singular set: a cone point of order m is
// surrounded by a link circle c and an orbi-2-cell whose boundary is m*c; the
// cone point of a ballic 3-orbifold is filled by an orbi-3-cell whose
// boundary is n0*sigma0 + sum (n0/m_i) sigma_hat_i. The ws-model is a CW
// structure of |M| whose open cells each lie in one stratum, weighted by the
// order of the local group there.

#include "orbihom/chain_complex.hpp"
#include "orbihom/intlin.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orbihom {

struct Incidence
{
    std::string id;
    Integer coeff;

    friend bool operator==(Incidence const&, Incidence const&) = default;
};

struct Cell
{
    std::string id;
    int dim = 0;
    Integer weight = 1;
    std::vector<Incidence> boundary; // repeated ids are summed

    friend bool operator==(Cell const&, Cell const&) = default;
};

class WeightedCellComplex
{
public:
    using SubcomplexMap = std::map<std::string, std::vector<std::string>>;

    WeightedCellComplex() = default;

    /// Validates ids, weights, face dimensions and dd = 0; throws
    /// Error(Input) naming the offending cell.
    static WeightedCellComplex build(std::string name, int dim, std::vector<Cell> cells,
                                     SubcomplexMap subcomplexes = {});

    std::string const& name() const { return name_; }
    int dim() const { return dim_; }
    std::vector<Cell> const& cells() const { return cells_; }
    SubcomplexMap const& subcomplexes() const { return subs_; }

    Cell const* find(std::string const& id) const;
    bool has_subcomplex(std::string const& name) const { return subs_.count(name) != 0; }
    /// Throws Error(Input) for an unknown name.
    LabelSet subcomplex_cells(std::string const& name) const;
    /// Empty set for an unknown name.
    LabelSet subcomplex_or_empty(std::string const& name) const;
    LabelSet all_cells() const;

    ChainComplex chain_complex() const;

    WeightedCellComplex renamed(std::string name) const;

    friend bool operator==(WeightedCellComplex const&, WeightedCellComplex const&) = default;

private:
    std::string name_;
    int dim_ = 0;
    std::vector<Cell> cells_;
    SubcomplexMap subs_;
    std::map<std::string, std::size_t> index_;
};

/// Product cell structure: dimensions add, weights multiply, boundaries
/// follow the Koszul rule. Named subcomplexes S of `a` become S x b and the
/// "boundary" subcomplex becomes (da x b) u (a x db).
WeightedCellComplex tensor(WeightedCellComplex const& a, WeightedCellComplex const& b);

/// One 0-cell and one 1-cell per factor, k >= 0.
WeightedCellComplex torus_complex(int k);

// ---------------------------------------------------------------- descriptors

struct OrbifoldDesc;

namespace desc {

struct Disc2
{
    long n = 2;
};

struct Ball3
{
    long m1 = 2, m2 = 2, m3 = 2;
};

struct Ball3Cyclic
{
    long n = 2;
};

struct Surface
{
    long genus = 0;
    long boundary = 0;
    std::vector<long> cones;
};

struct ProductTorus
{
    std::shared_ptr<OrbifoldDesc const> base;
    int k = 1;
};

struct Custom
{
    std::shared_ptr<WeightedCellComplex const> complex;
    std::string source;
};

} // namespace desc

struct OrbifoldDesc
{
    std::variant<desc::Disc2, desc::Ball3, desc::Ball3Cyclic, desc::Surface, desc::ProductTorus, desc::Custom>
        value;

    static OrbifoldDesc disc2(long n) { return {desc::Disc2{n}}; }
    static OrbifoldDesc ball3(long a, long b, long c) { return {desc::Ball3{a, b, c}}; }
    static OrbifoldDesc ball3_cyclic(long n) { return {desc::Ball3Cyclic{n}}; }
    static OrbifoldDesc surface(long g, long b, std::vector<long> cones = {})
    {
        return {desc::Surface{g, b, std::move(cones)}};
    }
    static OrbifoldDesc product_torus(OrbifoldDesc base, int k)
    {
        return {desc::ProductTorus{std::make_shared<OrbifoldDesc const>(std::move(base)), k}};
    }
    static OrbifoldDesc custom(WeightedCellComplex c, std::string source)
    {
        return {desc::Custom{std::make_shared<WeightedCellComplex const>(std::move(c)), std::move(source)}};
    }

    bool is_custom() const;
    /// Top dimension of the orbifold.
    int dim() const;
    /// Canonical descriptor text, e.g. "surface(1,2;3)" or "disc2(4) x torus(2)".
    std::string to_string() const;
};

bool is_spherical_triple(long m1, long m2, long m3);

/// Local-group order at the cone point of B^3(m1,m2,m3): lcm for (2,2,odd),
/// twice the lcm otherwise.
Integer cone_point_index(long m1, long m2, long m3);

WeightedCellComplex t_model(OrbifoldDesc const& d);
WeightedCellComplex underlying_model(OrbifoldDesc const& d);
WeightedCellComplex ws_model(OrbifoldDesc const& d);

/// Cochain complex of ws-cochains on a stratified cell structure, reindexed
/// as a chain complex: degree n-q holds the q-cells, with basis w(e) e*.
/// Cochains supported off `rel` (a face-closed set) give the relative
/// complex. The coboundary entry (f, e) is [f:e] w(e) / w(f).
ChainComplex ws_cochain_complex(WeightedCellComplex const& x, LabelSet const& rel = {});

/// ws-H^q for q in [0, n].
std::vector<FgAbGroup> ws_cohomology(WeightedCellComplex const& x, LabelSet const& rel = {},
                                     Coefficients coeff = Coefficients::Z);

// ---------------------------------------------------------------- .owc codec

/// Parses the line-oriented .owc format. Diagnostics carry "line N:".
WeightedCellComplex parse_owc(std::string const& text);
std::string serialize_owc(WeightedCellComplex const& x);

} // namespace orbihom

#endif
