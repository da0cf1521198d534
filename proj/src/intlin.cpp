#include "orbihom/intlin.hpp"

#include "orbihom/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace orbihom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (auto const& r : rows) {
        if (r.size() != cols_)
            fail_precondition("IntMatrix: ragged initializer");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::vector<IntVector> const& columns)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            fail_precondition("IntMatrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::diagonal(IntVector const& entries)
{
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::select_rows(std::vector<std::size_t> const& idx) const
{
    IntMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            m(i, c) = (*this)(idx[i], c);
    return m;
}

IntMatrix IntMatrix::select_cols(std::vector<std::size_t> const& idx) const
{
    IntMatrix m(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j)
            m(r, j) = (*this)(r, idx[j]);
    return m;
}

IntMatrix IntMatrix::row_range(std::size_t begin, std::size_t end) const
{
    IntMatrix m(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(r - begin, c) = (*this)(r, c);
    return m;
}

IntMatrix IntMatrix::col_range(std::size_t begin, std::size_t end) const
{
    IntMatrix m(rows_, end - begin);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = begin; c < end; ++c)
            m(r, c - begin) = (*this)(r, c);
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Integer const& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Integer const& q)
{
    if (q == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(src, c) != 0)
            (*this)(dst, c) += q * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Integer const& q)
{
    if (q == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, src) != 0)
            (*this)(r, dst) += q * (*this)(r, src);
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b)
{
    if (a.cols_ != b.rows_)
        fail_precondition("IntMatrix product: dimension mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            Integer const& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0)
                    p(i, j) += x * b(k, j);
        }
    return p;
}

IntVector operator*(IntMatrix const& a, IntVector const& v)
{
    if (a.cols_ != v.size())
        fail_precondition("IntMatrix-vector product: dimension mismatch");
    IntVector out(a.rows_, Integer(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (v[k] != 0 && a(i, k) != 0)
                out[i] += a(i, k) * v[k];
    return out;
}

bool operator==(IntMatrix const& a, IntMatrix const& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix hconcat(IntMatrix const& a, IntMatrix const& b)
{
    if (a.rows() != b.rows())
        fail_precondition("hconcat: row count mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

IntMatrix vconcat(IntMatrix const& a, IntMatrix const& b)
{
    if (a.cols() != b.cols())
        fail_precondition("vconcat: column count mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            m(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r)
            m(a.rows() + r, c) = b(r, c);
    }
    return m;
}

IntMatrix negate(IntMatrix m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        m.negate_row(r);
    return m;
}

Integer determinant(IntMatrix const& a)
{
    if (a.rows() != a.cols())
        fail_precondition("determinant: matrix is not square");
    std::size_t const n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k) == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::string to_string(IntVector const& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(IntMatrix const& a)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < a.rows(); ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < a.cols(); ++c)
            os << (c ? "," : "") << a(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

bool is_zero(IntVector const& v)
{
    return std::all_of(v.begin(), v.end(), [](Integer const& x) { return x == 0; });
}

namespace {

Integer floor_div(Integer const& a, Integer const& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

// ---------------------------------------------------------------- HNF

HermiteForm hnf(IntMatrix const& a)
{
    HermiteForm out;
    out.H = a;
    out.U = IntMatrix::identity(a.rows());
    IntMatrix& H = out.H;
    IntMatrix& U = out.U;
    std::size_t const m = a.rows();
    std::size_t r = 0;

    for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
        bool have_pivot = false;
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (H(i, c) != 0 && (best == m || abs(H(i, c)) < abs(H(best, c))))
                    best = i;
            if (best == m)
                break;
            have_pivot = true;
            H.swap_rows(r, best);
            U.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (H(i, c) == 0)
                    continue;
                Integer q = -floor_div(H(i, c), H(r, c));
                H.add_row_multiple(i, r, q);
                U.add_row_multiple(i, r, q);
                if (H(i, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (!have_pivot)
            continue;
        if (H(r, c) < 0) {
            H.negate_row(r);
            U.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = -floor_div(H(i, c), H(r, c));
            H.add_row_multiple(i, r, q);
            U.add_row_multiple(i, r, q);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

// ---------------------------------------------------------------- SNF

IntVector SmithForm::diagonal() const
{
    std::size_t const n = std::min(S.rows(), S.cols());
    IntVector d(n);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = S(i, i);
    return d;
}

namespace {

struct SmithState
{
    IntMatrix S, U, V, U_inv, V_inv;

    void row_add(std::size_t dst, std::size_t src, Integer const& q)
    {
        S.add_row_multiple(dst, src, q);
        U.add_row_multiple(dst, src, q);
        U_inv.add_col_multiple(src, dst, -q);
    }
    void col_add(std::size_t dst, std::size_t src, Integer const& q)
    {
        S.add_col_multiple(dst, src, q);
        V.add_col_multiple(dst, src, q);
        V_inv.add_row_multiple(src, dst, -q);
    }
    void row_swap(std::size_t a, std::size_t b)
    {
        S.swap_rows(a, b);
        U.swap_rows(a, b);
        U_inv.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b)
    {
        S.swap_cols(a, b);
        V.swap_cols(a, b);
        V_inv.swap_rows(a, b);
    }
    void row_negate(std::size_t r)
    {
        S.negate_row(r);
        U.negate_row(r);
        U_inv.negate_col(r);
    }
};

} // namespace

SmithForm snf(IntMatrix const& a)
{
    std::size_t const m = a.rows();
    std::size_t const n = a.cols();
    SmithState st{a, IntMatrix::identity(m), IntMatrix::identity(n),
                  IntMatrix::identity(m), IntMatrix::identity(n)};
    IntMatrix& S = st.S;

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // Minimal nonzero entry of the trailing block becomes the pivot.
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (S(i, j) != 0 && (bi == m || abs(S(i, j)) < abs(S(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == m)
            break;
        st.row_swap(t, bi);
        st.col_swap(t, bj);

        for (;;) {
            for (std::size_t i = t + 1; i < m; ++i)
                if (S(i, t) != 0)
                    st.row_add(i, t, -floor_div(S(i, t), S(t, t)));
            for (std::size_t j = t + 1; j < n; ++j)
                if (S(t, j) != 0)
                    st.col_add(j, t, -floor_div(S(t, j), S(t, t)));

            // Remainders left in the pivot row/column: bring the smallest in.
            std::size_t ri = m, cj = n;
            for (std::size_t i = t + 1; i < m; ++i)
                if (S(i, t) != 0 && (ri == m || abs(S(i, t)) < abs(S(ri, t))))
                    ri = i;
            for (std::size_t j = t + 1; j < n; ++j)
                if (S(t, j) != 0 && (cj == n || abs(S(t, j)) < abs(S(t, cj))))
                    cj = j;
            if (ri != m || cj != n) {
                if (cj == n || (ri != m && abs(S(ri, t)) <= abs(S(t, cj))))
                    st.row_swap(t, ri);
                else
                    st.col_swap(t, cj);
                continue;
            }

            // Pivot must divide the whole trailing block.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (S(i, j) != 0 && mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t()) == 0) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            st.row_add(t, bad, 1);
        }
        if (S(t, t) < 0)
            st.row_negate(t);
    }

    SmithForm out{std::move(st.S), std::move(st.U), std::move(st.V),
                  std::move(st.U_inv), std::move(st.V_inv), t};
    return out;
}

// ---------------------------------------------------------------- groups

FgAbGroup FgAbGroup::free(std::size_t rank)
{
    FgAbGroup g;
    g.rank_ = rank;
    return g;
}

FgAbGroup FgAbGroup::cyclic(Integer const& order)
{
    return from_cyclic_orders({order});
}

FgAbGroup FgAbGroup::from_cyclic_orders(std::vector<Integer> const& orders)
{
    FgAbGroup g;
    IntVector finite;
    for (Integer const& d : orders) {
        if (d < 0)
            fail_precondition("FgAbGroup: negative cyclic order");
        if (d == 0)
            ++g.rank_;
        else if (d > 1)
            finite.push_back(d);
    }
    if (finite.empty())
        return g;
    SmithForm s = snf(IntMatrix::diagonal(finite));
    for (Integer const& d : s.diagonal())
        if (d > 1)
            g.torsion_.push_back(d);
    return g;
}

FgAbGroup FgAbGroup::direct_sum(FgAbGroup const& other) const
{
    std::vector<Integer> orders(rank_ + other.rank_, Integer(0));
    orders.insert(orders.end(), torsion_.begin(), torsion_.end());
    orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
    return from_cyclic_orders(orders);
}

FgAbGroup FgAbGroup::tensor(FgAbGroup const& other) const
{
    // Z (x) Z = Z, Z (x) Z/d = Z/d, Z/d (x) Z/e = Z/gcd(d,e).
    std::vector<Integer> orders(rank_ * other.rank_, Integer(0));
    for (std::size_t i = 0; i < rank_; ++i)
        orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
    for (std::size_t i = 0; i < other.rank_; ++i)
        orders.insert(orders.end(), torsion_.begin(), torsion_.end());
    for (Integer const& d : torsion_)
        for (Integer const& e : other.torsion_)
            orders.push_back(gcd(d, e));
    return from_cyclic_orders(orders);
}

FgAbGroup FgAbGroup::power(std::size_t copies) const
{
    FgAbGroup out;
    for (std::size_t i = 0; i < copies; ++i)
        out = out.direct_sum(*this);
    return out;
}

std::string FgAbGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ > 0) {
        os << 'Z';
        if (rank_ > 1)
            os << '^' << rank_;
        first = false;
    }
    for (Integer const& d : torsion_) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbGroup FgAbGroup::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    auto is_digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) != 0;
        });
    };
    auto bad = [&]() -> FgAbGroup {
        fail_input("malformed group '" + std::string(text) + "'");
    };

    std::string_view s = trim(text);
    if (s == "0")
        return FgAbGroup{};
    std::vector<Integer> orders;
    while (!s.empty()) {
        std::size_t plus = s.find('+');
        std::string_view term = trim(s.substr(0, plus));
        s = plus == std::string_view::npos ? std::string_view{} : s.substr(plus + 1);
        if (term.empty() || term.front() != 'Z')
            return bad();
        term.remove_prefix(1);
        if (term.empty()) {
            orders.emplace_back(0);
        } else if (term.front() == '^') {
            term.remove_prefix(1);
            if (!is_digits(term))
                return bad();
            orders.insert(orders.end(), std::stoul(std::string(term)), Integer(0));
        } else if (term.front() == '/') {
            term.remove_prefix(1);
            if (!is_digits(term))
                return bad();
            orders.emplace_back(std::string(term));
        } else {
            return bad();
        }
    }
    // Only the canonical form is accepted: free part first, then a divisor
    // chain d1 | d2 | ... with every d >= 2.
    FgAbGroup const g = from_cyclic_orders(orders);
    auto squeeze = [](std::string_view v) {
        std::string out;
        for (char c : v)
            if (!std::isspace(static_cast<unsigned char>(c)))
                out += c;
        return out;
    };
    if (squeeze(g.to_string()) != squeeze(text))
        fail_input("group '" + std::string(text) + "' is not in canonical form '" + g.to_string() + "'");
    return g;
}

AbPresentation AbPresentation::of(FgAbGroup const& g)
{
    AbPresentation p;
    p.generators = g.summand_count();
    p.relations = IntMatrix(p.generators, g.torsion().size());
    for (std::size_t i = 0; i < g.torsion().size(); ++i)
        p.relations(i, i) = g.torsion()[i];
    return p;
}

bool GroupHom::well_defined() const
{
    if (matrix.rows() != target.generators || matrix.cols() != source.generators)
        return false;
    return subgroup_contains(target.relations, matrix * source.relations);
}

FgAbGroup cokernel_group(IntMatrix const& a)
{
    SmithForm s = snf(a);
    std::vector<Integer> orders(a.rows(), Integer(0));
    IntVector d = s.diagonal();
    for (std::size_t i = 0; i < s.rank; ++i)
        orders[i] = d[i];
    return FgAbGroup::from_cyclic_orders(orders);
}

std::optional<IntVector> solve_linear(IntMatrix const& a, IntVector const& b)
{
    if (b.size() != a.rows())
        fail_precondition("solve_linear: right-hand side length does not match row count");
    // U * a^T = H, so a * U^T = H^T; solve H^T y = b then x = U^T y.
    HermiteForm h = hnf(a.transpose());
    IntVector residual = b;
    IntVector x(a.cols(), Integer(0));
    for (std::size_t i = 0; i < h.rank; ++i) {
        std::size_t const p = h.pivot_cols[i];
        Integer const& pivot = h.H(i, p);
        if (mpz_divisible_p(residual[p].get_mpz_t(), pivot.get_mpz_t()) == 0)
            return std::nullopt;
        Integer y = residual[p] / pivot;
        if (y == 0)
            continue;
        for (std::size_t j = 0; j < residual.size(); ++j)
            if (h.H(i, j) != 0)
                residual[j] -= y * h.H(i, j);
        for (std::size_t j = 0; j < x.size(); ++j)
            if (h.U(i, j) != 0)
                x[j] += y * h.U(i, j);
    }
    if (!is_zero(residual))
        return std::nullopt;
    return x;
}

IntMatrix kernel_basis(IntMatrix const& a)
{
    HermiteForm h = hnf(a.transpose());
    std::vector<std::size_t> idx;
    for (std::size_t i = h.rank; i < a.cols(); ++i)
        idx.push_back(i);
    return h.U.select_rows(idx).transpose();
}

Lattice::Lattice(IntMatrix const& gens) : ambient_(gens.rows())
{
    HermiteForm h = hnf(gens.transpose());
    std::vector<std::size_t> idx(h.rank);
    for (std::size_t i = 0; i < h.rank; ++i)
        idx[i] = i;
    basis_ = h.H.select_rows(idx).transpose();
    pivots_ = h.pivot_cols;
}

bool Lattice::contains(IntVector const& v) const
{
    if (v.size() != ambient_)
        fail_precondition("Lattice::contains: ambient dimension mismatch");
    IntVector r = v;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        std::size_t const p = pivots_[k];
        if (r[p] == 0)
            continue;
        Integer const& pivot = basis_(p, k);
        if (mpz_divisible_p(r[p].get_mpz_t(), pivot.get_mpz_t()) == 0)
            return false;
        Integer q = r[p] / pivot;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_(j, k) != 0)
                r[j] -= q * basis_(j, k);
    }
    return is_zero(r);
}

IntMatrix lattice_basis(IntMatrix const& gens)
{
    return Lattice(gens).basis();
}

bool subgroup_contains(IntMatrix const& a, IntMatrix const& b)
{
    if (a.rows() != b.rows())
        fail_precondition("subgroup_contains: ambient ranks differ");
    Lattice lat(a);
    for (std::size_t c = 0; c < b.cols(); ++c)
        if (!lat.contains(b.column(c)))
            return false;
    return true;
}

} // namespace orbihom
