#include "orbihom/chain_complex.hpp"

#include "orbihom/error.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <sstream>

namespace orbihom {

namespace {

std::vector<std::string> const& empty_basis()
{
    static std::vector<std::string> const empty;
    return empty;
}

} // namespace

ChainComplex::ChainComplex(std::vector<std::vector<std::string>> bases, std::vector<IntMatrix> boundaries)
    : bases_(std::move(bases)), boundaries_(std::move(boundaries))
{
    if (boundaries_.size() != bases_.size())
        fail_precondition("ChainComplex: need one boundary slot per degree");
    for (int q = 1; q <= top_dim(); ++q) {
        IntMatrix const& d = boundaries_[q];
        if (d.rows() != rank(q - 1) || d.cols() != rank(q)) {
            std::ostringstream os;
            os << "ChainComplex: boundary in degree " << q << " is " << d.rows() << "x" << d.cols()
               << ", expected " << rank(q - 1) << "x" << rank(q);
            fail_precondition(os.str());
        }
    }
    if (!boundaries_.empty())
        boundaries_[0] = IntMatrix(0, rank(0));
}

ChainComplex ChainComplex::point(std::string label)
{
    return ChainComplex({{std::move(label)}}, {IntMatrix(0, 1)});
}

ChainComplex ChainComplex::circle(std::string const& prefix)
{
    return ChainComplex({{prefix + "0"}, {prefix + "1"}}, {IntMatrix(0, 1), IntMatrix(1, 1)});
}

std::size_t ChainComplex::rank(int q) const
{
    if (q < 0 || q > top_dim())
        return 0;
    return bases_[q].size();
}

std::vector<std::string> const& ChainComplex::basis(int q) const
{
    if (q < 0 || q > top_dim())
        return empty_basis();
    return bases_[q];
}

IntMatrix ChainComplex::boundary(int q) const
{
    if (q >= 1 && q <= top_dim())
        return boundaries_[q];
    return IntMatrix(rank(q - 1), rank(q));
}

std::optional<std::size_t> ChainComplex::index_of(int q, std::string const& label) const
{
    auto const& b = basis(q);
    auto it = std::find(b.begin(), b.end(), label);
    if (it == b.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - b.begin());
}

std::optional<int> ChainComplex::degree_of(std::string const& label) const
{
    for (int q = 0; q <= top_dim(); ++q)
        if (index_of(q, label))
            return q;
    return std::nullopt;
}

ChainComplex ChainComplex::with_labels(std::vector<std::vector<std::string>> bases) const
{
    return ChainComplex(std::move(bases), boundaries_);
}

std::optional<BoundaryViolation> validate(ChainComplex const& c)
{
    for (int q = 2; q <= c.top_dim(); ++q) {
        IntMatrix prod = c.boundary(q - 1) * c.boundary(q);
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j)
                if (prod(i, j) != 0) {
                    BoundaryViolation v;
                    v.degree = q;
                    v.face_label = c.basis(q - 2)[i];
                    v.cell_label = c.basis(q)[j];
                    v.value = prod(i, j);
                    std::ostringstream os;
                    os << "boundary of boundary is nonzero at q=" << q << ": coefficient " << v.value
                       << " of '" << v.face_label << "' in dd('" << v.cell_label << "')";
                    v.message = os.str();
                    return v;
                }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- homology

HomologyResult::HomologyResult(Coefficients coeff, std::vector<DegreeHomology> degrees)
    : coeff_(coeff), degrees_(std::move(degrees))
{
}

FgAbGroup HomologyResult::group(int q) const
{
    if (q < 0 || q > top_dim())
        return FgAbGroup{};
    return degrees_[q].group;
}

std::vector<FgAbGroup> HomologyResult::groups() const
{
    std::vector<FgAbGroup> out;
    for (auto const& d : degrees_)
        out.push_back(d.group);
    return out;
}

DegreeHomology const& HomologyResult::degree(int q) const
{
    if (q < 0 || q > top_dim())
        fail_precondition("HomologyResult: degree out of range");
    return degrees_[q];
}

IntVector HomologyResult::express(int q, IntVector const& cycle) const
{
    if (coeff_ != Coefficients::Z)
        fail_precondition("express: only available for integer coefficients");
    if (q < 0 || q > top_dim()) {
        if (!cycle.empty())
            fail_precondition("express: degree out of range");
        return {};
    }
    DegreeHomology const& d = degrees_[q];
    if (cycle.size() != d.cycle_test.cols())
        fail_precondition("express: chain has wrong length");
    if (!is_zero(d.cycle_test * cycle))
        fail_precondition("express: chain " + to_string(cycle) + " in degree " + std::to_string(q) +
                          " is not a cycle");
    IntVector y = d.to_summands * (d.to_kernel * cycle);
    for (std::size_t i = 0; i < y.size(); ++i)
        if (d.moduli[i] != 0)
            mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d.moduli[i].get_mpz_t());
    return y;
}

AbPresentation HomologyResult::presentation(int q) const
{
    return AbPresentation::of(group(q));
}

HomologyResult homology(ChainComplex const& c, Coefficients coeff)
{
    if (auto v = validate(c))
        fail_precondition("homology of an invalid complex: " + v->message);

    std::vector<DegreeHomology> out;
    for (int q = 0; q <= c.top_dim(); ++q) {
        DegreeHomology dh;
        std::size_t const nq = c.rank(q);
        dh.cycle_test = c.boundary(q);

        SmithForm s = snf(dh.cycle_test);
        std::size_t const r = s.rank;
        std::size_t const k = nq - r;
        IntMatrix kernel = s.V.col_range(r, nq);
        dh.to_kernel = s.V_inv.row_range(r, nq);
        IntMatrix x = dh.to_kernel * c.boundary(q + 1);

        SmithForm s2 = snf(x);
        if (coeff == Coefficients::Q) {
            dh.group = FgAbGroup::free(k - s2.rank);
            out.push_back(std::move(dh));
            continue;
        }

        IntVector diag = s2.diagonal();
        std::vector<std::size_t> summands;
        std::vector<Integer> orders;
        for (std::size_t i = 0; i < s2.rank; ++i)
            if (diag[i] > 1) {
                summands.push_back(i);
                dh.moduli.push_back(diag[i]);
                orders.push_back(diag[i]);
            }
        for (std::size_t i = s2.rank; i < k; ++i) {
            summands.push_back(i);
            dh.moduli.emplace_back(0);
            orders.emplace_back(0);
        }
        dh.group = FgAbGroup::from_cyclic_orders(orders);
        dh.to_summands = s2.U.select_rows(summands);
        for (std::size_t i : summands)
            dh.generators.push_back(kernel * s2.U_inv.column(i));
        out.push_back(std::move(dh));
    }
    return HomologyResult(coeff, std::move(out));
}

long euler_characteristic(ChainComplex const& c)
{
    long chi = 0;
    for (int q = 0; q <= c.top_dim(); ++q)
        chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(q));
    return chi;
}

// ---------------------------------------------------------------- tensor

ChainComplex tensor(ChainComplex const& c, ChainComplex const& d)
{
    int const nc = c.top_dim();
    int const nd = d.top_dim();
    if (nc < 0 || nd < 0)
        return ChainComplex{};
    int const n = nc + nd;

    // offset[k][i]: position of block C_i (x) D_{k-i} inside degree k.
    std::vector<std::vector<std::size_t>> offset(n + 1);
    std::vector<std::vector<std::string>> bases(n + 1);
    for (int k = 0; k <= n; ++k) {
        offset[k].assign(nc + 1, 0);
        for (int i = 0; i <= nc; ++i) {
            offset[k][i] = bases[k].size();
            int const j = k - i;
            if (j < 0 || j > nd)
                continue;
            for (auto const& x : c.basis(i))
                for (auto const& y : d.basis(j))
                    bases[k].push_back(x + "_x_" + y);
        }
    }

    std::vector<IntMatrix> boundaries(n + 1);
    boundaries[0] = IntMatrix(0, bases[0].size());
    for (int k = 1; k <= n; ++k) {
        IntMatrix m(bases[k - 1].size(), bases[k].size());
        for (int i = 0; i <= nc; ++i) {
            int const j = k - i;
            if (j < 0 || j > nd)
                continue;
            IntMatrix dc = c.boundary(i);
            IntMatrix dd = d.boundary(j);
            std::size_t const ny = d.rank(j);
            for (std::size_t a = 0; a < c.rank(i); ++a)
                for (std::size_t b = 0; b < ny; ++b) {
                    std::size_t const col = offset[k][i] + a * ny + b;
                    // dx (x) y lands in block (i-1, j)
                    if (i >= 1)
                        for (std::size_t f = 0; f < c.rank(i - 1); ++f)
                            if (dc(f, a) != 0)
                                m(offset[k - 1][i - 1] + f * ny + b, col) += dc(f, a);
                    // (-1)^i x (x) dy lands in block (i, j-1)
                    if (j >= 1) {
                        std::size_t const ny1 = d.rank(j - 1);
                        for (std::size_t f = 0; f < ny1; ++f)
                            if (dd(f, b) != 0) {
                                Integer v = dd(f, b);
                                if (i % 2 != 0)
                                    v = -v;
                                m(offset[k - 1][i] + a * ny1 + f, col) += v;
                            }
                    }
                }
        }
        boundaries[k] = std::move(m);
    }
    return ChainComplex(std::move(bases), std::move(boundaries));
}

ChainComplex torus(int k)
{
    if (k < 0)
        fail_precondition("torus: negative dimension");
    ChainComplex t = ChainComplex::point("t");
    for (int i = 1; i <= k; ++i) {
        ChainComplex s = ChainComplex::circle("s" + std::to_string(i) + "_");
        t = i == 1 ? s : tensor(t, s);
    }
    return t;
}

// ---------------------------------------------------------------- sub/quotient

namespace {

void require_known(ChainComplex const& c, LabelSet const& labels)
{
    for (auto const& l : labels)
        if (!c.degree_of(l))
            fail_precondition("unknown cell '" + l + "'");
}

ChainComplex restrict_to(ChainComplex const& c, LabelSet const& keep)
{
    std::vector<std::vector<std::size_t>> idx(c.top_dim() + 1);
    std::vector<std::vector<std::string>> bases(c.top_dim() + 1);
    for (int q = 0; q <= c.top_dim(); ++q)
        for (std::size_t i = 0; i < c.rank(q); ++i)
            if (keep.count(c.basis(q)[i])) {
                idx[q].push_back(i);
                bases[q].push_back(c.basis(q)[i]);
            }
    std::vector<IntMatrix> boundaries(c.top_dim() + 1);
    for (int q = 1; q <= c.top_dim(); ++q)
        boundaries[q] = c.boundary(q).select_rows(idx[q - 1]).select_cols(idx[q]);
    if (c.top_dim() >= 0)
        boundaries[0] = IntMatrix(0, idx[0].size());
    return ChainComplex(std::move(bases), std::move(boundaries));
}

} // namespace

std::optional<std::pair<std::string, std::string>> find_open_face(ChainComplex const& c, LabelSet const& sub)
{
    for (int q = 1; q <= c.top_dim(); ++q) {
        IntMatrix d = c.boundary(q);
        for (std::size_t j = 0; j < c.rank(q); ++j) {
            if (!sub.count(c.basis(q)[j]))
                continue;
            for (std::size_t i = 0; i < c.rank(q - 1); ++i)
                if (d(i, j) != 0 && !sub.count(c.basis(q - 1)[i]))
                    return std::make_pair(c.basis(q - 1)[i], c.basis(q)[j]);
        }
    }
    return std::nullopt;
}

ChainComplex relative(ChainComplex const& c, LabelSet const& sub)
{
    require_known(c, sub);
    if (auto open = find_open_face(c, sub))
        fail_precondition("relative: subcomplex is not closed: face '" + open->first + "' of '" +
                          open->second + "' is missing");
    LabelSet keep;
    for (int q = 0; q <= c.top_dim(); ++q)
        for (auto const& l : c.basis(q))
            if (!sub.count(l))
                keep.insert(l);
    return restrict_to(c, keep);
}

ChainComplex subcomplex(ChainComplex const& c, LabelSet const& cells)
{
    require_known(c, cells);
    if (auto open = find_open_face(c, cells))
        fail_precondition("subcomplex: face '" + open->first + "' of '" + open->second +
                          "' is missing");
    return restrict_to(c, cells);
}

// ---------------------------------------------------------------- chain maps

IntMatrix ChainMap::at(int q) const
{
    if (q >= 0 && static_cast<std::size_t>(q) < maps.size())
        return maps[q];
    return IntMatrix(target.rank(q), source.rank(q));
}

bool ChainMap::commutes() const
{
    int const n = std::max(source.top_dim(), target.top_dim());
    for (int q = 0; q <= n; ++q) {
        IntMatrix f = at(q);
        if (f.rows() != target.rank(q) || f.cols() != source.rank(q))
            return false;
    }
    for (int q = 1; q <= n; ++q)
        if (!(target.boundary(q) * at(q) == at(q - 1) * source.boundary(q)))
            return false;
    return true;
}

ChainMap identity_map(ChainComplex const& c)
{
    ChainMap f{c, c, {}};
    for (int q = 0; q <= c.top_dim(); ++q)
        f.maps.push_back(IntMatrix::identity(c.rank(q)));
    return f;
}

ChainMap inclusion_map(ChainComplex const& sub, ChainComplex const& whole)
{
    ChainMap f{sub, whole, {}};
    for (int q = 0; q <= std::max(sub.top_dim(), whole.top_dim()); ++q) {
        IntMatrix m(whole.rank(q), sub.rank(q));
        for (std::size_t j = 0; j < sub.rank(q); ++j) {
            auto i = whole.index_of(q, sub.basis(q)[j]);
            if (!i)
                fail_precondition("inclusion_map: cell '" + sub.basis(q)[j] + "' missing from target");
            m(*i, j) = 1;
        }
        f.maps.push_back(std::move(m));
    }
    return f;
}

std::vector<GroupHom> induced_map(ChainMap const& f, HomologyResult const& hc, HomologyResult const& hd)
{
    std::vector<GroupHom> out;
    int const n = std::max(f.source.top_dim(), f.target.top_dim());
    for (int q = 0; q <= n; ++q) {
        GroupHom h;
        h.source = hc.presentation(q);
        h.target = hd.presentation(q);
        h.matrix = IntMatrix(h.target.generators, h.source.generators);
        if (q <= hc.top_dim()) {
            IntMatrix fq = f.at(q);
            auto const& gens = hc.degree(q).generators;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                IntVector image = fq * gens[j];
                IntVector coords;
                try {
                    coords = hd.express(q, image);
                } catch (Error const&) {
                    fail_precondition("induced_map: image of generator " + std::to_string(j) +
                                      " in degree " + std::to_string(q) +
                                      " is not a cycle (chain map does not commute)");
                }
                for (std::size_t i = 0; i < coords.size(); ++i)
                    h.matrix(i, j) = coords[i];
            }
        }
        out.push_back(std::move(h));
    }
    return out;
}

// ---------------------------------------------------------------- Mayer-Vietoris

IntMatrix MayerVietorisData::j_matrix(int q) const
{
    return hconcat(proj_a.at(q), proj_b.at(q));
}

IntMatrix MayerVietorisData::i_matrix(int q) const
{
    return vconcat(incl_a.at(q), negate(incl_b.at(q)));
}

MayerVietorisData mayer_vietoris(ChainComplex const& whole, LabelSet const& a, LabelSet const& b)
{
    require_known(whole, a);
    require_known(whole, b);
    for (int q = 0; q <= whole.top_dim(); ++q)
        for (auto const& l : whole.basis(q))
            if (!a.count(l) && !b.count(l))
                fail_precondition("mayer_vietoris: cell '" + l + "' is covered by neither piece");
    if (auto open = find_open_face(whole, a))
        fail_precondition("mayer_vietoris: first piece is not closed: face '" + open->first + "' of '" +
                          open->second + "' is missing");
    if (auto open = find_open_face(whole, b))
        fail_precondition("mayer_vietoris: second piece is not closed: face '" + open->first + "' of '" +
                          open->second + "' is missing");

    LabelSet both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(both, both.begin()));

    MayerVietorisData mv;
    mv.whole = whole;
    mv.part_a = subcomplex(whole, a);
    mv.part_b = subcomplex(whole, b);
    mv.intersection = subcomplex(whole, both);
    mv.incl_a = inclusion_map(mv.intersection, mv.part_a);
    mv.incl_b = inclusion_map(mv.intersection, mv.part_b);
    mv.proj_a = inclusion_map(mv.part_a, whole);
    mv.proj_b = inclusion_map(mv.part_b, whole);
    return mv;
}

IntVector connecting_class(MayerVietorisData const& mv, HomologyResult const& h_intersection, int q,
                           IntVector const& z, std::optional<IntVector> const& preimage)
{
    if (q <= 0)
        return {};
    IntMatrix j = mv.j_matrix(q);
    IntVector ab;
    if (preimage) {
        if (!(j * *preimage == z))
            fail_precondition("connecting_class: supplied preimage does not map onto the cycle");
        ab = *preimage;
    } else {
        auto sol = solve_linear(j, z);
        if (!sol)
            fail_internal("connecting_class: j is not surjective on chains");
        ab = std::move(*sol);
    }

    std::size_t const na = mv.part_a.rank(q);
    IntVector a(ab.begin(), ab.begin() + static_cast<long>(na));
    IntVector b(ab.begin() + static_cast<long>(na), ab.end());
    IntVector da = mv.part_a.boundary(q) * a;
    IntVector db = mv.part_b.boundary(q) * b;
    da.insert(da.end(), db.begin(), db.end());

    auto c = solve_linear(mv.i_matrix(q - 1), da);
    if (!c)
        fail_internal("connecting_class: boundary of the preimage does not come from the intersection");
    return h_intersection.express(q - 1, *c);
}

std::vector<GroupHom> connecting_hom(MayerVietorisData const& mv, HomologyResult const& h_intersection,
                                     HomologyResult const& h_whole)
{
    std::vector<GroupHom> out;
    for (int q = 0; q <= mv.top_dim(); ++q) {
        GroupHom h;
        h.source = h_whole.presentation(q);
        h.target = h_intersection.presentation(q - 1);
        h.matrix = IntMatrix(h.target.generators, h.source.generators);
        if (q >= 1) {
            auto const& gens = h_whole.degree(q).generators;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                IntVector coords = connecting_class(mv, h_intersection, q, gens[g]);
                for (std::size_t i = 0; i < coords.size(); ++i)
                    h.matrix(i, g) = coords[i];
            }
        }
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace orbihom
