#include "orbihom/orbmodel.hpp"

#include "orbihom/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

namespace orbihom {

namespace {

bool valid_id(std::string const& id)
{
    return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    });
}

Cell make_cell(std::string id, int dim, Integer weight = 1, std::vector<Incidence> boundary = {})
{
    return Cell{std::move(id), dim, std::move(weight), std::move(boundary)};
}

} // namespace

// ---------------------------------------------------------------- complex

WeightedCellComplex WeightedCellComplex::build(std::string name, int dim, std::vector<Cell> cells,
                                               SubcomplexMap subcomplexes)
{
    WeightedCellComplex x;
    x.name_ = std::move(name);
    x.dim_ = dim;
    if (dim < 0)
        fail_input("complex dimension must be non-negative");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        Cell const& c = cells[i];
        if (!valid_id(c.id))
            fail_input("invalid cell id '" + c.id + "'");
        if (!x.index_.emplace(c.id, i).second)
            fail_input("duplicate cell id '" + c.id + "'");
        if (c.dim < 0 || c.dim > dim)
            fail_input("cell '" + c.id + "' has dimension " + std::to_string(c.dim) + " outside [0, " +
                       std::to_string(dim) + "]");
        if (c.weight < 1)
            fail_input("cell '" + c.id + "' has weight < 1");
    }
    x.cells_ = std::move(cells);
    for (Cell const& c : x.cells_)
        for (Incidence const& inc : c.boundary) {
            Cell const* f = x.find(inc.id);
            if (!f)
                fail_input("cell '" + c.id + "' references unknown cell '" + inc.id + "'");
            if (f->dim != c.dim - 1)
                fail_input("cell '" + c.id + "' of dimension " + std::to_string(c.dim) +
                           " lists boundary cell '" + inc.id + "' of dimension " + std::to_string(f->dim));
        }
    for (auto const& [sub, ids] : subcomplexes)
        for (auto const& id : ids)
            if (!x.find(id))
                fail_input("subcomplex '" + sub + "' references unknown cell '" + id + "'");
    x.subs_ = std::move(subcomplexes);
    if (auto v = validate(x.chain_complex()))
        fail_input(v->message);
    return x;
}

Cell const* WeightedCellComplex::find(std::string const& id) const
{
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &cells_[it->second];
}

LabelSet WeightedCellComplex::subcomplex_cells(std::string const& name) const
{
    auto it = subs_.find(name);
    if (it == subs_.end())
        fail_input("complex '" + name_ + "' has no subcomplex named '" + name + "'");
    return LabelSet(it->second.begin(), it->second.end());
}

LabelSet WeightedCellComplex::subcomplex_or_empty(std::string const& name) const
{
    auto it = subs_.find(name);
    if (it == subs_.end())
        return {};
    return LabelSet(it->second.begin(), it->second.end());
}

LabelSet WeightedCellComplex::all_cells() const
{
    LabelSet s;
    for (Cell const& c : cells_)
        s.insert(c.id);
    return s;
}

ChainComplex WeightedCellComplex::chain_complex() const
{
    std::vector<std::vector<std::string>> bases(dim_ + 1);
    std::vector<std::size_t> pos(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        pos[i] = bases[cells_[i].dim].size();
        bases[cells_[i].dim].push_back(cells_[i].id);
    }
    std::vector<IntMatrix> boundaries(dim_ + 1);
    for (int q = 1; q <= dim_; ++q)
        boundaries[q] = IntMatrix(bases[q - 1].size(), bases[q].size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        Cell const& c = cells_[i];
        for (Incidence const& inc : c.boundary)
            boundaries[c.dim](pos[index_.at(inc.id)], pos[i]) += inc.coeff;
    }
    return ChainComplex(std::move(bases), std::move(boundaries));
}

WeightedCellComplex WeightedCellComplex::renamed(std::string name) const
{
    WeightedCellComplex x = *this;
    x.name_ = std::move(name);
    return x;
}

WeightedCellComplex tensor(WeightedCellComplex const& a, WeightedCellComplex const& b)
{
    auto product_id = [](std::string const& x, std::string const& y) { return x + "_x_" + y; };
    std::vector<Cell> cells;
    int const n = a.dim() + b.dim();
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= a.dim(); ++i) {
            int const j = k - i;
            if (j < 0 || j > b.dim())
                continue;
            for (Cell const& x : a.cells()) {
                if (x.dim != i)
                    continue;
                for (Cell const& y : b.cells()) {
                    if (y.dim != j)
                        continue;
                    Cell c = make_cell(product_id(x.id, y.id), k, x.weight * y.weight);
                    for (Incidence const& f : x.boundary)
                        c.boundary.push_back({product_id(f.id, y.id), f.coeff});
                    for (Incidence const& g : y.boundary)
                        c.boundary.push_back({product_id(x.id, g.id), i % 2 == 0 ? g.coeff : Integer(-g.coeff)});
                    cells.push_back(std::move(c));
                }
            }
        }

    auto product_set = [&](LabelSet const& left, LabelSet const& right) {
        std::vector<std::string> out;
        for (int k = 0; k <= n; ++k)
            for (int i = 0; i <= a.dim(); ++i)
                for (Cell const& x : a.cells()) {
                    if (x.dim != i || !left.count(x.id))
                        continue;
                    for (Cell const& y : b.cells())
                        if (y.dim == k - i && right.count(y.id))
                            out.push_back(product_id(x.id, y.id));
                }
        return out;
    };

    WeightedCellComplex::SubcomplexMap subs;
    LabelSet const all_a = a.all_cells();
    LabelSet const all_b = b.all_cells();
    for (auto const& [name, ids] : a.subcomplexes()) {
        if (name == "boundary")
            continue;
        subs[name] = product_set(LabelSet(ids.begin(), ids.end()), all_b);
    }
    if (a.has_subcomplex("boundary") || b.has_subcomplex("boundary")) {
        std::vector<std::string> da = product_set(a.subcomplex_or_empty("boundary"), all_b);
        std::vector<std::string> db = product_set(all_a, b.subcomplex_or_empty("boundary"));
        LabelSet seen(da.begin(), da.end());
        for (auto& id : db)
            if (seen.insert(id).second)
                da.push_back(id);
        subs["boundary"] = std::move(da);
    }
    return WeightedCellComplex::build(a.name() + " x " + b.name(), n, std::move(cells), std::move(subs));
}

WeightedCellComplex torus_complex(int k)
{
    if (k < 0)
        fail_input("torus dimension must be non-negative");
    if (k == 0)
        return WeightedCellComplex::build("torus(0)", 0, {make_cell("t", 0)});
    WeightedCellComplex t;
    for (int i = 1; i <= k; ++i) {
        std::string const p = "s" + std::to_string(i) + "_";
        WeightedCellComplex s =
            WeightedCellComplex::build("circle", 1, {make_cell(p + "0", 0), make_cell(p + "1", 1)});
        t = i == 1 ? s : tensor(t, s);
    }
    return t.renamed("torus(" + std::to_string(k) + ")");
}

// ---------------------------------------------------------------- descriptors

bool OrbifoldDesc::is_custom() const
{
    return std::holds_alternative<desc::Custom>(value);
}

int OrbifoldDesc::dim() const
{
    struct Visitor
    {
        int operator()(desc::Disc2 const&) const { return 2; }
        int operator()(desc::Ball3 const&) const { return 3; }
        int operator()(desc::Ball3Cyclic const&) const { return 3; }
        int operator()(desc::Surface const&) const { return 2; }
        int operator()(desc::ProductTorus const& p) const { return p.base->dim() + p.k; }
        int operator()(desc::Custom const& c) const { return c.complex->dim(); }
    };
    return std::visit(Visitor{}, value);
}

std::string OrbifoldDesc::to_string() const
{
    struct Visitor
    {
        std::string operator()(desc::Disc2 const& d) const { return "disc2(" + std::to_string(d.n) + ")"; }
        std::string operator()(desc::Ball3 const& d) const
        {
            return "ball3(" + std::to_string(d.m1) + "," + std::to_string(d.m2) + "," + std::to_string(d.m3) +
                   ")";
        }
        std::string operator()(desc::Ball3Cyclic const& d) const
        {
            return "ball3cyclic(" + std::to_string(d.n) + ")";
        }
        std::string operator()(desc::Surface const& d) const
        {
            std::string s = "surface(" + std::to_string(d.genus) + "," + std::to_string(d.boundary);
            for (std::size_t i = 0; i < d.cones.size(); ++i)
                s += (i == 0 ? ";" : ",") + std::to_string(d.cones[i]);
            return s + ")";
        }
        std::string operator()(desc::ProductTorus const& p) const
        {
            return p.base->to_string() + " x torus(" + std::to_string(p.k) + ")";
        }
        std::string operator()(desc::Custom const& c) const { return "file:" + c.source; }
    };
    return std::visit(Visitor{}, value);
}

bool is_spherical_triple(long m1, long m2, long m3)
{
    std::array<long, 3> m{m1, m2, m3};
    std::sort(m.begin(), m.end());
    if (m[0] != 2)
        return false;
    if (m[1] == 2)
        return m[2] >= 2;
    return m[1] == 3 && m[2] >= 3 && m[2] <= 5;
}

Integer cone_point_index(long m1, long m2, long m3)
{
    if (!is_spherical_triple(m1, m2, m3))
        fail_input("(" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(m3) +
                   ") is not a spherical triple");
    std::array<long, 3> m{m1, m2, m3};
    std::sort(m.begin(), m.end());
    Integer l = lcm(lcm(Integer(m[0]), Integer(m[1])), Integer(m[2]));
    bool const dihedral_odd = m[0] == 2 && m[1] == 2 && m[2] % 2 != 0;
    return dihedral_odd ? l : Integer(2 * l);
}

namespace {

void check_order(long n, char const* what)
{
    if (n < 2)
        fail_input(std::string(what) + " must be at least 2, got " + std::to_string(n));
}

std::string idx(char const* base, std::size_t i)
{
    return std::string(base) + std::to_string(i + 1);
}

// Disc2(n): boundary circle c_out at v0, inner circle c_in at u linked to v0
// by r, annulus A between them, orbi-disc sigma_hat of weight n over the
// cone point.
WeightedCellComplex disc_model(long n, bool underlying, std::string name)
{
    check_order(n, "disc2 index");
    Integer const w = underlying ? Integer(1) : Integer(n);
    Integer const mult = underlying ? Integer(1) : Integer(n);
    std::vector<Cell> cells{
        make_cell("v0", 0),
        make_cell("u", 0),
        make_cell("c_out", 1),
        make_cell("c_in", 1),
        make_cell("r", 1, 1, {{"v0", 1}, {"u", -1}}),
        make_cell("A", 2, 1, {{"c_out", 1}, {"c_in", -1}}),
        make_cell("sigma_hat", 2, w, {{"c_in", mult}}),
    };
    WeightedCellComplex::SubcomplexMap subs{
        {"boundary", {"v0", "c_out"}},
        {"cones", {"u", "c_in", "sigma_hat"}},
        {"complement", {"v0", "u", "c_out", "c_in", "r", "A"}},
    };
    return WeightedCellComplex::build(std::move(name), 2, std::move(cells), std::move(subs));
}

struct SurfaceCells
{
    std::vector<Cell> cells;
    WeightedCellComplex::SubcomplexMap subs;
};

// One vertex v with the 2g handle loops, a link circle c_i and orbi-disc
// sigma_hat_i per cone point, a boundary circle d_j at its own vertex w_j
// joined to v by r_j, and the big cell sigma0 with boundary
// -sum c_i - sum d_j (commutators contribute nothing).
SurfaceCells surface_cells(long g, long b, std::vector<long> const& cones, bool underlying)
{
    if (g < 0 || b < 0)
        fail_input("surface genus and boundary count must be non-negative");
    for (long m : cones)
        check_order(m, "cone order");

    SurfaceCells s;
    auto& cells = s.cells;
    cells.push_back(make_cell("v", 0));
    for (long j = 0; j < b; ++j)
        cells.push_back(make_cell(idx("w", j), 0));
    for (long k = 0; k < g; ++k) {
        cells.push_back(make_cell(idx("a", k), 1));
        cells.push_back(make_cell(idx("b", k), 1));
    }
    for (std::size_t i = 0; i < cones.size(); ++i)
        cells.push_back(make_cell(idx("c", i), 1));
    for (long j = 0; j < b; ++j) {
        cells.push_back(make_cell(idx("d", j), 1));
        cells.push_back(make_cell(idx("r", j), 1, 1, {{"v", 1}, {idx("w", j), -1}}));
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        Integer const m = underlying ? Integer(1) : Integer(cones[i]);
        cells.push_back(make_cell(idx("sigma_hat", i), 2, m, {{idx("c", i), m}}));
    }
    Cell big = make_cell("sigma0", 2);
    for (std::size_t i = 0; i < cones.size(); ++i)
        big.boundary.push_back({idx("c", i), -1});
    for (long j = 0; j < b; ++j)
        big.boundary.push_back({idx("d", j), -1});
    cells.push_back(std::move(big));

    if (b > 0) {
        std::vector<std::string> bd;
        for (long j = 0; j < b; ++j) {
            bd.push_back(idx("w", j));
            bd.push_back(idx("d", j));
        }
        s.subs["boundary"] = std::move(bd);
    }
    if (!cones.empty()) {
        std::vector<std::string> cone_cells{"v"};
        std::vector<std::string> complement;
        for (std::size_t i = 0; i < cones.size(); ++i)
            cone_cells.push_back(idx("c", i));
        for (std::size_t i = 0; i < cones.size(); ++i)
            cone_cells.push_back(idx("sigma_hat", i));
        for (Cell const& c : cells)
            if (c.id.rfind("sigma_hat", 0) != 0)
                complement.push_back(c.id);
        s.subs["cones"] = std::move(cone_cells);
        s.subs["complement"] = std::move(complement);
    }
    return s;
}

// The t-model of a ball bounded by S^2(cones) plus the orbi-3-cell over the
// cone point: d(tau_hat) = n0 sigma0 + sum (n0/m_i) sigma_hat_i.
WeightedCellComplex ball_model(std::vector<long> const& cones, Integer const& n0, bool underlying,
                               std::string name)
{
    SurfaceCells s = surface_cells(0, 0, cones, underlying);
    std::vector<std::string> sphere;
    for (Cell const& c : s.cells)
        sphere.push_back(c.id);
    Cell tau = make_cell("tau_hat", 3, underlying ? Integer(1) : n0);
    tau.boundary.push_back({"sigma0", underlying ? Integer(1) : n0});
    for (std::size_t i = 0; i < cones.size(); ++i)
        tau.boundary.push_back({idx("sigma_hat", i), underlying ? Integer(1) : Integer(n0 / cones[i])});
    s.cells.push_back(std::move(tau));
    WeightedCellComplex::SubcomplexMap subs{{"boundary", std::move(sphere)}};
    return WeightedCellComplex::build(std::move(name), 3, std::move(s.cells), std::move(subs));
}

enum class ModelKind { T, Underlying };

WeightedCellComplex cellular_model(OrbifoldDesc const& d, ModelKind kind)
{
    bool const underlying = kind == ModelKind::Underlying;
    std::string const name = d.to_string();
    if (auto const* p = std::get_if<desc::Disc2>(&d.value))
        return disc_model(p->n, underlying, name);
    if (auto const* p = std::get_if<desc::Surface>(&d.value)) {
        SurfaceCells s = surface_cells(p->genus, p->boundary, p->cones, underlying);
        return WeightedCellComplex::build(name, 2, std::move(s.cells), std::move(s.subs));
    }
    if (auto const* p = std::get_if<desc::Ball3>(&d.value)) {
        Integer const n0 = cone_point_index(p->m1, p->m2, p->m3);
        return ball_model({p->m1, p->m2, p->m3}, n0, underlying, name);
    }
    if (auto const* p = std::get_if<desc::Ball3Cyclic>(&d.value)) {
        check_order(p->n, "ball3cyclic index");
        return ball_model({p->n, p->n}, Integer(p->n), underlying, name);
    }
    if (auto const* p = std::get_if<desc::ProductTorus>(&d.value)) {
        if (p->k < 1)
            fail_input("torus factor count must be at least 1");
        return tensor(cellular_model(*p->base, kind), torus_complex(p->k)).renamed(name);
    }
    auto const& c = std::get<desc::Custom>(d.value);
    if (underlying)
        fail_input("no underlying-space model can be inferred for a custom complex (" + c.source + ")");
    return *c.complex;
}

// ---------------------------------------------------------------- ws-models

WeightedCellComplex ws_disc(long n, std::string name)
{
    check_order(n, "disc2 index");
    std::vector<Cell> cells{
        make_cell("v", 0),
        make_cell("p", 0, n),
        make_cell("a", 1, 1, {{"p", 1}, {"v", -1}}),
        make_cell("c", 1),
        make_cell("E", 2, 1, {{"c", 1}}),
    };
    return WeightedCellComplex::build(std::move(name), 2, std::move(cells), {{"boundary", {"v", "c"}}});
}

// Cone points become weighted vertices p_i joined to v by slits s_i; handle
// loops and boundary arcs as in the t-model; one 2-cell E.
WeightedCellComplex ws_surface(long g, long b, std::vector<long> const& cones, std::string name)
{
    if (g < 0 || b < 0)
        fail_input("surface genus and boundary count must be non-negative");
    for (long m : cones)
        check_order(m, "cone order");
    std::vector<Cell> cells{make_cell("v", 0)};
    for (std::size_t i = 0; i < cones.size(); ++i)
        cells.push_back(make_cell(idx("p", i), 0, cones[i]));
    for (long j = 0; j < b; ++j)
        cells.push_back(make_cell(idx("w", j), 0));
    for (long k = 0; k < g; ++k) {
        cells.push_back(make_cell(idx("a", k), 1));
        cells.push_back(make_cell(idx("b", k), 1));
    }
    for (std::size_t i = 0; i < cones.size(); ++i)
        cells.push_back(make_cell(idx("s", i), 1, 1, {{idx("p", i), 1}, {"v", -1}}));
    for (long j = 0; j < b; ++j) {
        cells.push_back(make_cell(idx("d", j), 1));
        cells.push_back(make_cell(idx("r", j), 1, 1, {{"v", 1}, {idx("w", j), -1}}));
    }
    Cell face = make_cell("E", 2);
    for (long j = 0; j < b; ++j)
        face.boundary.push_back({idx("d", j), -1});
    cells.push_back(std::move(face));

    WeightedCellComplex::SubcomplexMap subs;
    if (b > 0) {
        std::vector<std::string> bd;
        for (long j = 0; j < b; ++j) {
            bd.push_back(idx("w", j));
            bd.push_back(idx("d", j));
        }
        subs["boundary"] = std::move(bd);
    }
    return WeightedCellComplex::build(std::move(name), 2, std::move(cells), std::move(subs));
}

// Boundary sphere: cone vertices p_i, edges E_ij, two triangles. Interior:
// centre o of weight n0, singular arcs g_i from o to p_i, three disks D_ij
// spanned by g_i, E_ij, g_j, and two 3-cells.
WeightedCellComplex ws_ball(long m1, long m2, long m3, std::string name)
{
    Integer const n0 = cone_point_index(m1, m2, m3);
    std::vector<Cell> cells{
        make_cell("p1", 0, m1),
        make_cell("p2", 0, m2),
        make_cell("p3", 0, m3),
        make_cell("o", 0, n0),
        make_cell("E12", 1, 1, {{"p2", 1}, {"p1", -1}}),
        make_cell("E23", 1, 1, {{"p3", 1}, {"p2", -1}}),
        make_cell("E31", 1, 1, {{"p1", 1}, {"p3", -1}}),
        make_cell("g1", 1, m1, {{"p1", 1}, {"o", -1}}),
        make_cell("g2", 1, m2, {{"p2", 1}, {"o", -1}}),
        make_cell("g3", 1, m3, {{"p3", 1}, {"o", -1}}),
        make_cell("F_up", 2, 1, {{"E12", 1}, {"E23", 1}, {"E31", 1}}),
        make_cell("F_down", 2, 1, {{"E12", -1}, {"E23", -1}, {"E31", -1}}),
        make_cell("D12", 2, 1, {{"g1", 1}, {"E12", 1}, {"g2", -1}}),
        make_cell("D23", 2, 1, {{"g2", 1}, {"E23", 1}, {"g3", -1}}),
        make_cell("D31", 2, 1, {{"g3", 1}, {"E31", 1}, {"g1", -1}}),
        make_cell("T_up", 3, 1, {{"F_up", 1}, {"D12", -1}, {"D23", -1}, {"D31", -1}}),
        make_cell("T_down", 3, 1, {{"F_down", 1}, {"D12", 1}, {"D23", 1}, {"D31", 1}}),
    };
    return WeightedCellComplex::build(std::move(name), 3, std::move(cells),
                                      {{"boundary", {"p1", "p2", "p3", "E12", "E23", "E31", "F_up", "F_down"}}});
}

// The singular axis g of weight n runs between the boundary cone points p1,
// p2; two half-disks D_a, D_b through the axis cut the ball into T_up, T_down.
WeightedCellComplex ws_ball_cyclic(long n, std::string name)
{
    check_order(n, "ball3cyclic index");
    std::vector<Cell> cells{
        make_cell("p1", 0, n),
        make_cell("p2", 0, n),
        make_cell("Ea", 1, 1, {{"p2", 1}, {"p1", -1}}),
        make_cell("Eb", 1, 1, {{"p2", 1}, {"p1", -1}}),
        make_cell("g", 1, n, {{"p2", 1}, {"p1", -1}}),
        make_cell("F_up", 2, 1, {{"Ea", 1}, {"Eb", -1}}),
        make_cell("F_down", 2, 1, {{"Eb", 1}, {"Ea", -1}}),
        make_cell("Da", 2, 1, {{"Ea", 1}, {"g", -1}}),
        make_cell("Db", 2, 1, {{"Eb", 1}, {"g", -1}}),
        make_cell("T_up", 3, 1, {{"F_up", 1}, {"Da", -1}, {"Db", 1}}),
        make_cell("T_down", 3, 1, {{"F_down", 1}, {"Da", 1}, {"Db", -1}}),
    };
    return WeightedCellComplex::build(std::move(name), 3, std::move(cells),
                                      {{"boundary", {"p1", "p2", "Ea", "Eb", "F_up", "F_down"}}});
}

} // namespace

WeightedCellComplex t_model(OrbifoldDesc const& d)
{
    return cellular_model(d, ModelKind::T);
}

WeightedCellComplex underlying_model(OrbifoldDesc const& d)
{
    return cellular_model(d, ModelKind::Underlying);
}

WeightedCellComplex ws_model(OrbifoldDesc const& d)
{
    std::string const name = d.to_string();
    if (auto const* p = std::get_if<desc::Disc2>(&d.value))
        return ws_disc(p->n, name);
    if (auto const* p = std::get_if<desc::Surface>(&d.value))
        return ws_surface(p->genus, p->boundary, p->cones, name);
    if (auto const* p = std::get_if<desc::Ball3>(&d.value))
        return ws_ball(p->m1, p->m2, p->m3, name);
    if (auto const* p = std::get_if<desc::Ball3Cyclic>(&d.value))
        return ws_ball_cyclic(p->n, name);
    if (auto const* p = std::get_if<desc::ProductTorus>(&d.value)) {
        if (p->k < 1)
            fail_input("torus factor count must be at least 1");
        return tensor(ws_model(*p->base), torus_complex(p->k)).renamed(name);
    }
    return *std::get<desc::Custom>(d.value).complex;
}

ChainComplex ws_cochain_complex(WeightedCellComplex const& x, LabelSet const& rel)
{
    ChainComplex const chains = x.chain_complex();
    for (auto const& id : rel)
        if (!x.find(id))
            fail_input("relative subcomplex references unknown cell '" + id + "'");
    if (auto open = find_open_face(chains, rel))
        fail_precondition("relative subcomplex is not closed: face '" + open->first + "' of '" +
                          open->second + "' is missing");

    int const n = x.dim();
    std::vector<std::vector<std::string>> bases(n + 1);
    for (int deg = 0; deg <= n; ++deg)
        for (auto const& id : chains.basis(n - deg))
            if (!rel.count(id))
                bases[deg].push_back(id);

    std::vector<IntMatrix> boundaries(n + 1);
    boundaries[0] = IntMatrix(0, bases[0].size());
    for (int deg = 1; deg <= n; ++deg) {
        int const q = n - deg; // columns: q-cells, rows: (q+1)-cells
        IntMatrix const d = chains.boundary(q + 1);
        IntMatrix m(bases[deg - 1].size(), bases[deg].size());
        for (std::size_t r = 0; r < bases[deg - 1].size(); ++r) {
            std::string const& f_id = bases[deg - 1][r];
            Cell const& f = *x.find(f_id);
            std::size_t const fi = *chains.index_of(q + 1, f_id);
            for (std::size_t c = 0; c < bases[deg].size(); ++c) {
                std::string const& e_id = bases[deg][c];
                Cell const& e = *x.find(e_id);
                Integer const& inc = d(*chains.index_of(q, e_id), fi);
                if (inc == 0)
                    continue;
                Integer num = inc * e.weight;
                if (mpz_divisible_p(num.get_mpz_t(), f.weight.get_mpz_t()) == 0)
                    fail_input("weights do not form a stratification: w('" + f_id + "') = " +
                               f.weight.get_str() + " does not divide [" + f_id + ":" + e_id + "] * w('" +
                               e_id + "') = " + num.get_str());
                m(r, c) = num / f.weight;
            }
        }
        boundaries[deg] = std::move(m);
    }
    return ChainComplex(std::move(bases), std::move(boundaries));
}

std::vector<FgAbGroup> ws_cohomology(WeightedCellComplex const& x, LabelSet const& rel, Coefficients coeff)
{
    HomologyResult h = homology(ws_cochain_complex(x, rel), coeff);
    std::vector<FgAbGroup> out(x.dim() + 1);
    for (int q = 0; q <= x.dim(); ++q)
        out[q] = h.group(x.dim() - q);
    return out;
}

} // namespace orbihom
