#include "doctest.h"

#include "covers.hpp"
#include "orbihom/error.hpp"
#include "orbihom/verify.hpp"

#include "json.hpp"

using namespace orbihom;

namespace {

LabelSet cone_disks(WeightedCellComplex const& x)
{
    return x.subcomplex_cells("cones");
}

LabelSet complement(WeightedCellComplex const& x)
{
    return x.subcomplex_cells("complement");
}

std::vector<FgAbGroup> groups(std::initializer_list<char const*> text)
{
    std::vector<FgAbGroup> out;
    for (char const* t : text)
        out.push_back(FgAbGroup::parse(t));
    return out;
}

} // namespace

TEST_CASE("exactness in presentation coordinates")
{
    // Z -2-> Z -> Z/2 is exact at the middle
    GroupHom f{AbPresentation::of(FgAbGroup::free(1)), AbPresentation::of(FgAbGroup::free(1)), IntMatrix{{2}}};
    GroupHom g{AbPresentation::of(FgAbGroup::free(1)), AbPresentation::of(FgAbGroup::cyclic(2)), IntMatrix{{1}}};
    CHECK(exactness_at(f, g).exact);
    CHECK(exactness_at(f, g).image == FgAbGroup::free(1));
    GroupHom h{AbPresentation::of(FgAbGroup::free(1)), AbPresentation::of(FgAbGroup::cyclic(4)), IntMatrix{{1}}};
    CHECK_FALSE(exactness_at(f, h).exact);
    // Z/4 -2-> Z/4 -2-> Z/4
    GroupHom two{AbPresentation::of(FgAbGroup::cyclic(4)), AbPresentation::of(FgAbGroup::cyclic(4)), IntMatrix{{2}}};
    CHECK(exactness_at(two, two).exact);
    CHECK(exactness_at(two, two).kernel == FgAbGroup::cyclic(2));
}

TEST_CASE("Mayer-Vietoris examples")
{
    WeightedCellComplex const s22 = t_model(OrbifoldDesc::surface(0, 0, {2, 2}));
    VerdictReport const r = check_mv(s22, cone_disks(s22), complement(s22));
    CHECK(r.passed());
    CHECK(r.assertions.size() == 9);

    WeightedCellComplex const s235 = t_model(OrbifoldDesc::surface(0, 0, {2, 3, 5}));
    CHECK(check_mv(s235, cone_disks(s235), complement(s235)).passed());

    ChainComplex disk({{"p", "q"}, {"e1", "e2", "m"}, {"F1", "F2"}},
                      {IntMatrix{}, IntMatrix{{-1, -1, -1}, {1, 1, 1}}, IntMatrix{{1, 0}, {0, -1}, {-1, 1}}});
    VerdictReport const half = check_mv(disk, {"p", "q", "e1", "m", "F1"}, {"p", "q", "e2", "m", "F2"}, "disk");
    CHECK(half.passed());
    CHECK(half.assertions.size() == 9);
}

TEST_CASE("Mayer-Vietoris negative control: zeroed connecting map")
{
    WeightedCellComplex const s22 = t_model(OrbifoldDesc::surface(0, 0, {2, 2}));
    ChainComplex const c = s22.chain_complex();
    MvSequence seq = mv_sequence(mayer_vietoris(c, cone_disks(s22), complement(s22)));
    REQUIRE(check_mv("control", seq).passed());
    for (auto& k : seq.k)
        k.matrix = IntMatrix(k.matrix.rows(), k.matrix.cols());
    VerdictReport const r = check_mv("control", seq);
    CHECK_FALSE(r.passed());
    CHECK(r.failures() >= 1);
}

TEST_CASE("Mayer-Vietoris on random two-set covers")
{
    std::mt19937_64 g(2024);
    std::vector<OrbifoldDesc> const ds = {
        OrbifoldDesc::disc2(3),           OrbifoldDesc::ball3(2, 3, 4), OrbifoldDesc::ball3_cyclic(4),
        OrbifoldDesc::surface(1, 1, {2}), OrbifoldDesc::surface(0, 0, {2, 3, 5}),
    };
    for (int t = 0; t < 25; ++t) {
        WeightedCellComplex const x = t_model(ds[t % ds.size()]);
        auto [a, b] = covers::random_cover(x, g);
        CAPTURE(x.name());
        VerdictReport const r = check_mv(x, a, b);
        CHECK(r.passed());
        CHECK(r.assertions.size() == 3 * static_cast<std::size_t>(x.dim() + 1));
    }
}

TEST_CASE("Kunneth")
{
    CHECK(kunneth_torus_product(groups({"Z", "Z/3", "0"}), 1) == groups({"Z", "Z + Z/3", "Z/3", "0"}));
    CHECK(kunneth_torus_product(groups({"Z", "Z/3", "0"}), 0) == groups({"Z", "Z/3", "0"}));
    for (long n : {2, 3, 4}) {
        auto const p = kunneth_torus_product(groups({"Z", ("Z/" + std::to_string(n)).c_str(), "0"}), 2);
        CHECK(p.at(4).is_trivial());
    }
    for (int k : {1, 2}) {
        VerdictReport const r = check_kunneth(OrbifoldDesc::disc2(3), k);
        CHECK(r.passed());
    }
    VerdictReport const bad = check_kunneth("control", groups({"Z", "Z + Z/3", "Z/3", "Z"}), groups({"Z", "Z/3", "0"}), 1);
    CHECK_FALSE(bad.passed());
}

TEST_CASE("rational, underlying, Hurewicz")
{
    CHECK(check_rational(OrbifoldDesc::disc2(9)).passed());
    CHECK(check_rational(OrbifoldDesc::surface(2, 0, {3, 3})).passed());
    CHECK(check_rational(OrbifoldDesc::ball3(2, 3, 4)).passed());
    CHECK_FALSE(check_rational("control", groups({"Z", "Z", "0"}), groups({"Z", "Z", "0"}), groups({"Z", "0", "0"}))
                    .passed());

    CHECK(classical_homology(OrbifoldDesc::surface(2, 0, {3})) == groups({"Z", "Z^4", "Z"}));
    CHECK(classical_homology(OrbifoldDesc::ball3_cyclic(5)) == groups({"Z", "0", "0", "0"}));
    CHECK(check_underlying(OrbifoldDesc::disc2(4)).passed());
    CHECK_FALSE(check_underlying("control", groups({"Z", "Z/2", "0"}), groups({"Z", "0", "0"})).passed());

    CHECK(check_hurewicz(OrbifoldDesc::disc2(7)).passed());
    CHECK(check_hurewicz(OrbifoldDesc::ball3(2, 2, 6)).passed());
    CHECK(check_hurewicz(OrbifoldDesc::surface(0, 0, {2, 2})).passed());
    CHECK_FALSE(check_hurewicz("control", FgAbGroup::cyclic(2), FgAbGroup::cyclic(3)).passed());
}

TEST_CASE("b-homotopy pairs")
{
    for (long n = 2; n <= 9; ++n) {
        CHECK(check_bhomotopy_pair(OrbifoldDesc::ball3_cyclic(n), OrbifoldDesc::disc2(n)).passed());
        CHECK(check_bhomotopy_pair(OrbifoldDesc::disc2(n), OrbifoldDesc::disc2(n)).passed());
    }
    VerdictReport const r = check_bhomotopy_pair(OrbifoldDesc::disc2(2), OrbifoldDesc::disc2(3));
    CHECK_FALSE(r.passed());
    REQUIRE(r.failures() == 1);
    for (auto const& a : r.assertions)
        if (!a.passed)
            CHECK(a.statement.find("H_1") != std::string::npos);
}

TEST_CASE("duality")
{
    for (long n : {2, 3, 5}) {
        DualityData const d = duality_data(OrbifoldDesc::disc2(n));
        CHECK(d.ws == groups({"Z", "0", "0"}));
        CHECK(d.t == groups({"Z", ("Z/" + std::to_string(n)).c_str(), "0"}));
        VerdictReport const r = check_duality(OrbifoldDesc::disc2(n));
        CHECK(r.passed());
        CHECK(r.assertions.size() == 6);
    }
    DualityData const s = duality_data(OrbifoldDesc::surface(0, 0, {2, 2, 2}));
    CHECK(s.ws.at(1) == FgAbGroup::parse("Z/2 + Z/2"));
    CHECK(s.t.at(1) == FgAbGroup::parse("Z/2 + Z/2"));
    CHECK(check_duality(OrbifoldDesc::surface(0, 0, {2, 2, 2})).passed());

    VerdictReport const ball = check_duality(OrbifoldDesc::ball3(2, 3, 4));
    CHECK(ball.assertions.size() == 8);
    bool tracked = false;
    for (auto const& note : ball.notes)
        tracked = tracked || note.find("tracked") != std::string::npos;
    CHECK(tracked);

    DualityData wrong = duality_data(OrbifoldDesc::disc2(3));
    wrong.ws_rel.at(1) = FgAbGroup{};
    CHECK_FALSE(check_duality("control", wrong).passed());
}

TEST_CASE("reports are deterministic and well-formed")
{
    WeightedCellComplex const x = t_model(OrbifoldDesc::surface(0, 0, {2, 3, 5}));
    std::string const a = check_mv(x, cone_disks(x), complement(x)).to_text();
    std::string const b = check_mv(x, cone_disks(x), complement(x)).to_text();
    CHECK(a == b);
    CHECK(a.rfind("RESULT PASS\n") == a.size() - 12);

    auto const j = nlohmann::json::parse(check_hurewicz(OrbifoldDesc::disc2(5)).to_json());
    CHECK(j.at("check").is_string());
    CHECK(j.at("passed") == true);
    CHECK(j.at("assertions").size() >= 1);
    CHECK(j.at("assertions")[0].contains("statement"));
}

TEST_CASE("custom complexes are rejected where no closed form exists")
{
    OrbifoldDesc const c = OrbifoldDesc::custom(t_model(OrbifoldDesc::disc2(2)), "x.owc");
    CHECK_THROWS_AS(check_rational(c), Error);
    CHECK_THROWS_AS(check_underlying(c), Error);
    CHECK_THROWS_AS(check_hurewicz(c), Error);
    CHECK_THROWS_AS(check_duality(c), Error);
}
