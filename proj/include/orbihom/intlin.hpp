#ifndef ORBIHOM_INTLIN_HPP
#define ORBIHOM_INTLIN_HPP

// Exact integer linear algebra over Z: Hermite and Smith normal forms,
// lattice membership, cokernels, and homomorphisms of finitely generated
// abelian groups. Relators are always stored as columns.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbihom {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix
{
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(std::size_t rows, std::vector<IntVector> const& columns);
    static IntMatrix diagonal(IntVector const& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Integer const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;

    IntMatrix transpose() const;
    IntMatrix select_rows(std::vector<std::size_t> const& idx) const;
    IntMatrix select_cols(std::vector<std::size_t> const& idx) const;
    IntMatrix row_range(std::size_t begin, std::size_t end) const;
    IntMatrix col_range(std::size_t begin, std::size_t end) const;

    bool is_zero() const;

    // Elementary operations, each unimodular.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);
    void add_row_multiple(std::size_t dst, std::size_t src, Integer const& q); // row dst += q * row src
    void add_col_multiple(std::size_t dst, std::size_t src, Integer const& q); // col dst += q * col src

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    friend IntVector operator*(IntMatrix const& a, IntVector const& v);
    friend bool operator==(IntMatrix const& a, IntMatrix const& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix hconcat(IntMatrix const& a, IntMatrix const& b);
IntMatrix vconcat(IntMatrix const& a, IntMatrix const& b);
IntMatrix negate(IntMatrix m);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
Integer determinant(IntMatrix const& a);

std::string to_string(IntMatrix const& a);
std::string to_string(IntVector const& v);

bool is_zero(IntVector const& v);

/// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/ds with
/// d1 | d2 | ... | ds and every di >= 2. Field equality is isomorphism.
class FgAbGroup
{
public:
    FgAbGroup() = default;

    static FgAbGroup free(std::size_t rank);
    static FgAbGroup cyclic(Integer const& order); // 0 gives Z, 1 gives 0

    /// Canonicalizes an arbitrary list of non-negative cyclic orders
    /// (0 = infinite cyclic) into divisor-chain form.
    static FgAbGroup from_cyclic_orders(std::vector<Integer> const& orders);

    /// Parses "0", "Z", "Z^3", "Z/2", "Z^2 + Z/2 + Z/4". The summands must
    /// already be in canonical order.
    static FgAbGroup parse(std::string_view text);

    std::size_t rank() const { return rank_; }
    std::vector<Integer> const& torsion() const { return torsion_; }
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }

    /// Number of cyclic summands in the canonical decomposition.
    std::size_t summand_count() const { return rank_ + torsion_.size(); }

    FgAbGroup direct_sum(FgAbGroup const& other) const;
    FgAbGroup tensor(FgAbGroup const& other) const;
    FgAbGroup power(std::size_t copies) const;

    std::string to_string() const;

    friend bool operator==(FgAbGroup const& a, FgAbGroup const& b)
    {
        return a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
    }

private:
    std::size_t rank_ = 0;
    std::vector<Integer> torsion_;
};

/// Z^generators / colspan(relations).
struct AbPresentation
{
    std::size_t generators = 0;
    IntMatrix relations; // generators x relators

    static AbPresentation of(FgAbGroup const& g);
};

/// Homomorphism between presented groups. Column j of `matrix` is the image
/// of source generator j in target generator coordinates.
struct GroupHom
{
    AbPresentation source;
    AbPresentation target;
    IntMatrix matrix;

    /// matrix * (each source relator) lies in the target relator lattice.
    bool well_defined() const;
};

struct HermiteForm
{
    IntMatrix H; // row Hermite normal form
    IntMatrix U; // unimodular, U * A = H
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Row Hermite normal form: row echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot).
HermiteForm hnf(IntMatrix const& a);

struct SmithForm
{
    IntMatrix S;
    IntMatrix U; // U * A * V = S
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;
    std::size_t rank = 0;

    IntVector diagonal() const;
};

/// Smith normal form with minimal-magnitude pivoting.
SmithForm snf(IntMatrix const& a);

/// Z^rows / colspan(a).
FgAbGroup cokernel_group(IntMatrix const& a);

/// An integer x with a * x = b, if any. The choice is deterministic: the
/// HNF of the transpose is back-substituted with free coordinates zero.
std::optional<IntVector> solve_linear(IntMatrix const& a, IntVector const& b);

/// Columns form a basis of the integer kernel {x : a * x = 0}.
IntMatrix kernel_basis(IntMatrix const& a);

/// Canonical basis (columns, HNF-reduced) of the lattice spanned by the
/// columns of `gens`. Two generating sets span the same lattice iff their
/// canonical bases are equal.
IntMatrix lattice_basis(IntMatrix const& gens);

/// colspan(b) is contained in colspan(a) over Z.
bool subgroup_contains(IntMatrix const& a, IntMatrix const& b);

/// Column lattice with a precomputed echelon basis for repeated membership
/// queries.
class Lattice
{
public:
    explicit Lattice(IntMatrix const& gens);

    bool contains(IntVector const& v) const;
    std::size_t ambient() const { return ambient_; }
    IntMatrix const& basis() const { return basis_; }

private:
    std::size_t ambient_ = 0;
    IntMatrix basis_;                 // columns
    std::vector<std::size_t> pivots_; // pivot row of each basis column
};

} // namespace orbihom

#endif
