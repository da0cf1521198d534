#include "doctest.h"

#include "orbihom/error.hpp"
#include "orbihom/groups.hpp"

#include <random>

using namespace orbihom;

TEST_CASE("free reduction")
{
    CHECK(free_reduce({{0, 2}, {0, -2}}).empty());
    CHECK(free_reduce({{0, 1}, {1, 1}, {1, -1}, {0, 2}}) == Word{{0, 3}});
    CHECK(concat({{1, 1}}, inverse({{1, 1}})).empty());
    CHECK(commutator({{0, 1}}, {{1, 1}}) == Word{{0, 1}, {1, 1}, {0, -1}, {1, -1}});
    CHECK(commutator({{0, 1}}, {{0, 3}}).empty());
}

TEST_CASE("presentations of the built-in families")
{
    Presentation const d = pi1_presentation(OrbifoldDesc::disc2(5));
    CHECK(d.to_string() == "<x | x^5>");
    CHECK(abelianization(d) == FgAbGroup::cyclic(5));

    Presentation const b = pi1_presentation(OrbifoldDesc::ball3(2, 3, 3));
    CHECK(b.generators().size() == 3);
    CHECK(b.relators().size() == 4);
    CHECK(b.relators()[0] == power(0, 2));
    CHECK(b.relators()[1] == power(1, 3));
    CHECK(b.relators()[2] == power(2, 3));
    CHECK(b.relators()[3] == Word{{0, 1}, {1, 1}, {2, 1}});
    CHECK(abelianization(b) == FgAbGroup::cyclic(3));

    CHECK(abelianization(pi1_presentation(OrbifoldDesc::surface(1, 1))) == FgAbGroup::free(2));
    CHECK(abelianization(pi1_presentation(OrbifoldDesc::ball3(2, 3, 5))).is_trivial());
    CHECK(abelianization(pi1_presentation(OrbifoldDesc::surface(1, 2, {3}))) ==
          FgAbGroup::parse("Z^3 + Z/3"));
    CHECK(abelianization(pi1_presentation(OrbifoldDesc::surface(0, 0, {2, 2}))) == FgAbGroup::cyclic(2));
    CHECK(abelianization(pi1_presentation(OrbifoldDesc::ball3(2, 2, 6))) == FgAbGroup::parse("Z/2 + Z/2"));
    CHECK(abelianization(pi1_presentation(OrbifoldDesc::ball3_cyclic(7))) == FgAbGroup::cyclic(7));
    CHECK(abelianization(pi1_presentation(OrbifoldDesc::product_torus(OrbifoldDesc::disc2(3), 2))) ==
          FgAbGroup::parse("Z^2 + Z/3"));
    CHECK_THROWS_AS(pi1_presentation(OrbifoldDesc::custom(t_model(OrbifoldDesc::disc2(2)), "x")), Error);
}

TEST_CASE("exponent matrix has one column per relator")
{
    Presentation p({"a", "b"});
    p.add_relator({{0, 2}, {1, -1}, {0, 1}});
    p.add_relator({});
    IntMatrix const e = p.exponent_matrix();
    CHECK(e.rows() == 2);
    CHECK(e.cols() == 2);
    CHECK(e(0, 0) == 3);
    CHECK(e(1, 0) == -1);
    CHECK(e(0, 1) == 0);
    CHECK(abelianization(p) == FgAbGroup::free(1));
    CHECK_THROWS_AS(p.add_relator({{2, 1}}), Error);
    CHECK(p.index_of("b") == 1);
    CHECK_THROWS_AS(p.index_of("c"), Error);
}

TEST_CASE("abelianization is invariant under relator rewrites")
{
    std::mt19937_64 g(11);
    std::vector<OrbifoldDesc> const ds = {
        OrbifoldDesc::disc2(6),          OrbifoldDesc::ball3(2, 2, 5), OrbifoldDesc::ball3(2, 3, 4),
        OrbifoldDesc::surface(1, 2, {3}), OrbifoldDesc::surface(2, 0, {2, 4}),
    };
    for (auto const& d : ds) {
        Presentation const p = pi1_presentation(d);
        FgAbGroup const ab = abelianization(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Word> rel = p.relators();
            for (int step = 0; step < 6; ++step) {
                std::size_t const i = g() % rel.size();
                std::size_t const j = g() % rel.size();
                Word const conj = power(g() % p.generators().size(), static_cast<long>(g() % 5) - 2);
                switch (g() % 4) {
                case 0: rel[i] = inverse(rel[i]); break;
                case 1: rel[i] = concat(concat(conj, rel[i]), inverse(conj)); break;
                case 2:
                    if (i != j)
                        rel[i] = concat(rel[i], rel[j]);
                    break;
                default: std::swap(rel[i], rel[j]);
                }
            }
            Presentation q(p.generators());
            for (auto& w : rel)
                q.add_relator(w);
            CAPTURE(q.to_string());
            CHECK(abelianization(q) == ab);
        }
    }
}
