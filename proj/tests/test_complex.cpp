#include "doctest.h"
#include "oracle.hpp"

#include "orbihom/chain_complex.hpp"
#include "orbihom/error.hpp"
#include "orbihom/orbmodel.hpp"

#include <numeric>

using namespace orbihom;

namespace {

std::string render(std::vector<FgAbGroup> const& gs)
{
    std::string s;
    for (std::size_t q = 0; q < gs.size(); ++q)
        s += (q ? ", " : "") + gs[q].to_string();
    return "(" + s + ")";
}

std::vector<oracle::Group> oracle_homology(ChainComplex const& c)
{
    std::vector<std::size_t> ranks;
    std::vector<oracle::Mat> d(c.top_dim() + 1);
    for (int q = 0; q <= c.top_dim(); ++q) {
        ranks.push_back(c.rank(q));
        if (q == 0)
            continue;
        IntMatrix const b = c.boundary(q);
        d[q] = oracle::Mat(b.rows(), std::vector<long long>(b.cols()));
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                d[q][i][j] = b(i, j).get_si();
    }
    return oracle::homology(ranks, d);
}

std::string render(std::vector<oracle::Group> const& gs)
{
    std::string s;
    for (std::size_t q = 0; q < gs.size(); ++q)
        s += (q ? ", " : "") + oracle::render(gs[q]);
    return "(" + s + ")";
}

// Closed disk as two half-disks glued along the arc m.
ChainComplex split_disk()
{
    return ChainComplex({{"p", "q"}, {"e1", "e2", "m"}, {"F1", "F2"}},
                        {IntMatrix{}, IntMatrix{{-1, -1, -1}, {1, 1, 1}}, IntMatrix{{1, 0}, {0, -1}, {-1, 1}}});
}

// Torus as two annuli meeting in the circles alpha and alpha2; seams b1, b2.
ChainComplex split_torus()
{
    return ChainComplex({{"x", "y"}, {"alpha", "alpha2", "b1", "b2"}, {"F1", "F2"}},
                        {IntMatrix{}, IntMatrix{{0, 0, -1, -1}, {0, 0, 1, 1}},
                         IntMatrix{{1, -1}, {-1, 1}, {0, 0}, {0, 0}}});
}

} // namespace

TEST_CASE("validate reports the first nonzero composite")
{
    ChainComplex bad({{"v"}, {"e"}, {"F"}}, {IntMatrix{}, IntMatrix{{1}}, IntMatrix{{1}}});
    auto v = validate(bad);
    REQUIRE(v);
    CHECK(v->degree == 2);
    CHECK(v->face_label == "v");
    CHECK(v->cell_label == "F");
    CHECK_THROWS_AS(homology(bad), Error);
    CHECK_FALSE(validate(torus(3)));
}

TEST_CASE("homology of small complexes")
{
    CHECK(render(homology(ChainComplex::point()).groups()) == "(Z)");
    CHECK(render(homology(ChainComplex::circle()).groups()) == "(Z, Z)");
    CHECK(render(homology(torus(2)).groups()) == "(Z, Z^2, Z)");
    CHECK(render(homology(torus(3)).groups()) == "(Z, Z^3, Z^3, Z)");
    // RP^2: v, e with de = 0, F with dF = 2e
    ChainComplex rp2({{"v"}, {"e"}, {"F"}}, {IntMatrix{}, IntMatrix{{0}}, IntMatrix{{2}}});
    CHECK(render(homology(rp2).groups()) == "(Z, Z/2, 0)");
    CHECK(render(homology(rp2, Coefficients::Q).groups()) == "(Z, 0, 0)");
    CHECK(euler_characteristic(rp2) == 1);
}

TEST_CASE("tensor product follows the Koszul rule")
{
    ChainComplex const t = tensor(ChainComplex::circle("a"), ChainComplex::circle("b"));
    CHECK(t.basis(1) == std::vector<std::string>{"a0_x_b1", "a1_x_b0"});
    CHECK_FALSE(validate(t));
    ChainComplex rp2({{"v"}, {"e"}, {"F"}}, {IntMatrix{}, IntMatrix{{0}}, IntMatrix{{2}}});
    // Z/2 (x) Z/2 in degree 2 and Tor in degree 3
    CHECK(render(homology(tensor(rp2, rp2)).groups()) == "(Z, Z/2 + Z/2, Z/2, Z/2, 0)");
}

TEST_CASE("relative complexes")
{
    ChainComplex const d = split_disk();
    CHECK(render(homology(relative(d, {})).groups()) == render(homology(d).groups()));
    LabelSet all{"p", "q", "e1", "e2", "m", "F1", "F2"};
    CHECK(render(homology(relative(d, all)).groups()) == "(0, 0, 0)");
    // (D, dD) = (Z in degree 2)
    CHECK(render(homology(relative(d, {"p", "q", "e1", "e2"})).groups()) == "(0, 0, Z)");
    CHECK_THROWS_AS(relative(d, {"e1"}), Error);
}

TEST_CASE("model homology agrees with the oracle")
{
    std::vector<OrbifoldDesc> ds{
        OrbifoldDesc::disc2(4),
        OrbifoldDesc::ball3(2, 3, 4),
        OrbifoldDesc::ball3_cyclic(6),
        OrbifoldDesc::surface(1, 2, {2, 4}),
        OrbifoldDesc::surface(0, 0, {2, 2, 3}),
        OrbifoldDesc::product_torus(OrbifoldDesc::disc2(3), 2),
    };
    for (auto const& d : ds) {
        CAPTURE(d.to_string());
        ChainComplex const c = t_model(d).chain_complex();
        CHECK(render(homology(c).groups()) == render(oracle_homology(c)));
    }
}

TEST_CASE("express recovers generator coordinates")
{
    WeightedCellComplex const x = t_model(OrbifoldDesc::disc2(5));
    ChainComplex const c = x.chain_complex();
    HomologyResult const h = homology(c);
    IntVector outer(c.rank(1));
    outer[*c.index_of(1, "c_out")] = 1;
    IntVector const coords = h.express(1, outer);
    REQUIRE(coords.size() == 1);
    CHECK(std::gcd(coords[0].get_si(), 5L) == 1);
    for (auto const& g : h.degree(1).generators)
        CHECK(h.express(1, g) == IntVector{1});
    IntVector notcycle(c.rank(1));
    notcycle[*c.index_of(1, "r")] = 1;
    CHECK_THROWS_AS(h.express(1, notcycle), Error);
}

TEST_CASE("induced maps of inclusions")
{
    SUBCASE("identity")
    {
        ChainComplex const c = torus(2);
        HomologyResult const h = homology(c);
        auto maps = induced_map(identity_map(c), h, h);
        for (int q = 0; q <= 2; ++q)
            CHECK(maps[q].matrix == IntMatrix::identity(h.group(q).summand_count()));
    }
    SUBCASE("boundary circle into the disc: generator to generator")
    {
        for (long n : {2, 3, 7}) {
            WeightedCellComplex const x = t_model(OrbifoldDesc::disc2(n));
            ChainComplex const whole = x.chain_complex();
            ChainComplex const bd = subcomplex(whole, x.subcomplex_cells("boundary"));
            auto maps = induced_map(inclusion_map(bd, whole), homology(bd), homology(whole));
            REQUIRE(maps[1].matrix.rows() == 1);
            REQUIRE(maps[1].matrix.cols() == 1);
            CHECK(std::gcd(maps[1].matrix(0, 0).get_si(), n) == 1);
            CHECK(maps[1].well_defined());
        }
    }
    SUBCASE("cone disc into S^2(2,2) is the identity on Z/2")
    {
        WeightedCellComplex const x = t_model(OrbifoldDesc::surface(0, 0, {2, 2}));
        ChainComplex const whole = x.chain_complex();
        ChainComplex const disc = subcomplex(whole, {"v", "c1", "sigma_hat1"});
        HomologyResult const hd = homology(disc);
        CHECK(hd.group(1) == FgAbGroup::cyclic(2));
        auto maps = induced_map(inclusion_map(disc, whole), hd, homology(whole));
        CHECK(maps[1].matrix(0, 0) % 2 != 0);
    }
}

TEST_CASE("connecting homomorphisms")
{
    SUBCASE("S^2(2,2) split into cone discs and annulus")
    {
        WeightedCellComplex const x = t_model(OrbifoldDesc::surface(0, 0, {2, 2}));
        ChainComplex const c = x.chain_complex();
        MayerVietorisData const mv = mayer_vietoris(c, x.subcomplex_cells("cones"), x.subcomplex_cells("complement"));
        HomologyResult const hi = homology(mv.intersection);
        HomologyResult const hm = homology(c);
        // generator of H_2 is 2 sigma0 + sigma_hat1 + sigma_hat2 up to sign
        IntVector g = hm.degree(2).generators.at(0);
        if (g[*c.index_of(2, "sigma0")] < 0)
            for (auto& v : g)
                v = -v;
        CHECK(g[*c.index_of(2, "sigma0")] == 2);
        CHECK(g[*c.index_of(2, "sigma_hat1")] == 1);
        CHECK(g[*c.index_of(2, "sigma_hat2")] == 1);
        auto k = connecting_hom(mv, hi, hm);
        CHECK(hi.group(1) == FgAbGroup::free(2));
        IntVector img = connecting_class(mv, hi, 2, g);
        // boundary of the cone-disc half is 2 c1 + 2 c2
        CHECK(((img == IntVector{2, 2}) || (img == IntVector{-2, -2})));
        CHECK(k[2].matrix.rows() == 2);
        CHECK(k[2].matrix.cols() == 1);
        CHECK(abs(k[2].matrix(0, 0)) == 2);
        CHECK(abs(k[2].matrix(1, 0)) == 2);
    }
    SUBCASE("disc from two half discs: all zero")
    {
        ChainComplex const c = split_disk();
        MayerVietorisData const mv = mayer_vietoris(c, {"p", "q", "e1", "m", "F1"}, {"p", "q", "e2", "m", "F2"});
        HomologyResult const hi = homology(mv.intersection);
        for (auto const& k : connecting_hom(mv, hi, homology(c)))
            CHECK(k.matrix.is_zero());
    }
    SUBCASE("torus from two annuli: rank one into H_0 of two circles")
    {
        ChainComplex const c = split_torus();
        MayerVietorisData const mv =
            mayer_vietoris(c, {"x", "y", "alpha", "alpha2", "b1", "F1"}, {"x", "y", "alpha", "alpha2", "b2", "F2"});
        HomologyResult const hi = homology(mv.intersection);
        CHECK(hi.group(0) == FgAbGroup::free(2));
        auto k = connecting_hom(mv, hi, homology(c));
        CHECK(snf(k[1].matrix).rank == 1);
    }
    SUBCASE("uncovered cells and open faces are named")
    {
        ChainComplex const c = split_disk();
        CHECK_THROWS_WITH_AS(mayer_vietoris(c, {"p", "q", "e1", "m", "F1"}, {"p", "q", "m"}),
                             doctest::Contains("'e2'"), Error);
        CHECK_THROWS_AS(mayer_vietoris(c, {"F1", "F2", "e1", "e2", "m"}, {"p", "q"}), Error);
    }
}
