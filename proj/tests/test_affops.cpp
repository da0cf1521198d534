#include "doctest.h"

#include "orbihom/affops.hpp"
#include "orbihom/error.hpp"

#include <random>

using namespace orbihom;
using namespace orbihom::affops;

namespace {

Point e(std::size_t i, std::size_t n)
{
    Point p(n, 0);
    p[i] = 1;
    return p;
}

AffineSimplex standard(std::size_t q)
{
    AffineSimplex s;
    for (std::size_t i = 0; i <= q; ++i)
        s.vertices.push_back(e(i, q + 1));
    return s;
}

AffineSimplex of(std::vector<Point> v)
{
    return AffineSimplex{std::move(v)};
}

// Pairwise distinct vertices, so a face occurs in at most one position.
AffineSimplex random_simplex(std::mt19937_64& g, std::size_t q, std::size_t n)
{
    AffineSimplex s;
    while (s.vertices.size() <= q) {
        Point p;
        for (std::size_t k = 0; k < n; ++k)
            p.emplace_back(static_cast<long>(g() % 17) - 8, static_cast<long>(g() % 8) + 1);
        for (auto& x : p)
            x.canonicalize();
        if (std::find(s.vertices.begin(), s.vertices.end(), p) == s.vertices.end())
            s.vertices.push_back(p);
    }
    return s;
}

std::vector<Rational> random_interior(std::mt19937_64& g, std::size_t count)
{
    std::vector<Rational> w;
    Rational sum = 0;
    for (std::size_t i = 0; i < count; ++i) {
        w.emplace_back(static_cast<long>(g() % 7) + 1);
        sum += w.back();
    }
    for (auto& x : w)
        x /= sum;
    return w;
}

} // namespace

TEST_CASE("boundary")
{
    AffineSimplex const s = standard(2);
    AffineChain expected;
    expected.add(of({e(1, 3), e(2, 3)}), 1);
    expected.add(of({e(0, 3), e(2, 3)}), -1);
    expected.add(of({e(0, 3), e(1, 3)}), 1);
    CHECK(boundary(s) == expected);
    CHECK(boundary(boundary(standard(3))).is_zero());
    Point const p{Rational(1, 3)};
    CHECK(boundary(of({p, p})).is_zero());
    CHECK_THROWS_AS(boundary(of({p})), Error);

    AffineChain mixed(standard(1));
    mixed.add(standard(2), 1);
    CHECK_THROWS_AS(mixed.degree(), Error);
    CHECK_THROWS_AS(boundary(mixed), Error);
}

TEST_CASE("boundary squares to zero on random chains")
{
    std::mt19937_64 g(5);
    for (int t = 0; t < 100; ++t) {
        std::size_t const q = 2 + g() % 3;
        AffineChain c;
        for (int i = 0; i < 3; ++i)
            c.add(random_simplex(g, q, 1 + g() % 3), static_cast<long>(g() % 7) - 3);
        if (c.is_zero())
            continue;
        CHECK(boundary(boundary(c)).is_zero());
    }
}

TEST_CASE("refinement of the standard triangle along an edge")
{
    AffineSimplex const psi = standard(2);
    Refinement const r = face_refinement(psi, {0, 1}, {Rational(1, 2), Rational(1, 2)});
    Point const mid{Rational(1, 2), Rational(1, 2), 0};
    AffineChain expected;
    expected.add(of({e(1, 3), mid, e(2, 3)}), -1);
    expected.add(of({e(0, 3), mid, e(2, 3)}), 1);
    CHECK(refine(psi, r) == expected);
    CHECK(refine(psi, r).size() == 2);
}

TEST_CASE("term counts and degrees")
{
    std::mt19937_64 g(9);
    for (int t = 0; t < 50; ++t) {
        std::size_t const q = 1 + g() % 4;
        AffineSimplex const psi = random_simplex(g, q, 2);
        std::size_t const p = 1 + g() % q;
        std::vector<std::size_t> face(q + 1);
        for (std::size_t i = 0; i <= q; ++i)
            face[i] = i;
        std::shuffle(face.begin(), face.end(), g);
        face.resize(p + 1);
        std::sort(face.begin(), face.end());
        Refinement const r = face_refinement(psi, face, random_interior(g, p + 1));
        AffineChain const sd = refine(psi, r);
        CHECK(sd.size() <= p + 1);
        CHECK(sd.degree() == static_cast<int>(q));
        AffineChain const pr = prism(psi, r);
        CHECK((pr.is_zero() || pr.degree() == static_cast<int>(q) + 1));
    }
    // distinct vertices give exactly p+1 terms
    AffineSimplex const psi = standard(3);
    Refinement const r = face_refinement(psi, {0, 2, 3}, {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    CHECK(refine(psi, r).size() == 3);
}

TEST_CASE("non-face refinement and prism")
{
    AffineSimplex const psi = standard(2);
    Refinement r;
    r.phi = of({e(0, 3), Point{5, 5, 5}});
    r.a = {Rational(1, 2), Rational(1, 2)};
    CHECK(refine(psi, r) == AffineChain(psi));
    AffineChain expected;
    for (std::size_t j = 0; j <= 2; ++j) {
        AffineSimplex d;
        for (std::size_t i = 0; i <= 2; ++i) {
            d.vertices.push_back(psi.vertices[i]);
            if (i == j)
                d.vertices.push_back(psi.vertices[i]);
        }
        expected.add(d, j % 2 == 0 ? -1 : 1);
    }
    CHECK(prism(psi, r) == expected);
    CHECK(prism(psi, r).degree() == 3);
}

TEST_CASE("interior points are validated")
{
    AffineSimplex const psi = standard(2);
    CHECK_THROWS_AS(face_refinement(psi, {0, 1}, {Rational(1), Rational(0)}), Error);
    CHECK_THROWS_AS(face_refinement(psi, {0, 1}, {Rational(1, 2), Rational(1, 3)}), Error);
    CHECK_THROWS_AS(face_refinement(psi, {1, 0}, {Rational(1, 2), Rational(1, 2)}), Error);
}

TEST_CASE("identities on an edge")
{
    AffineSimplex const psi = standard(1);
    Refinement const r = face_refinement(psi, {0, 1}, {Rational(1, 4), Rational(3, 4)});
    CHECK(boundary(refine(psi, r)) == refine(boundary(psi), r));
    CHECK(boundary(prism(psi, r)) == AffineChain(psi) - refine(psi, r) - prism(boundary(psi), r));
}

TEST_CASE("identities hold on random chains")
{
    std::mt19937_64 g(77);
    for (int t = 0; t < 60; ++t) {
        std::size_t const q = 1 + g() % 4;
        AffineSimplex const psi = random_simplex(g, q, 1 + g() % 3);
        std::size_t const p = 1 + g() % q;
        std::vector<std::size_t> face;
        for (std::size_t i = 0; i <= q && face.size() < p + 1; ++i)
            if (q + 1 - i == p + 1 - face.size() || g() % 2)
                face.push_back(i);
        Refinement const r = face_refinement(psi, face, random_interior(g, p + 1));
        AffineChain c(psi, 2);
        c.add(random_simplex(g, q, psi.ambient()), -1);
        CAPTURE(psi.to_string());
        CHECK(boundary(refine(c, r)) == refine(boundary(c), r));
        CHECK(boundary(prism(c, r)) == c - refine(c, r) - prism(boundary(c), r));
        // linearity
        AffineChain twice = c + c;
        AffineChain sd2 = refine(c, r) + refine(c, r);
        CHECK(refine(twice, r) == sd2);
    }
}

TEST_CASE("self-test")
{
    VerdictReport const a = refinement_identity_selftest(200, 42);
    CHECK(a.passed());
    CHECK(a.to_text() == refinement_identity_selftest(200, 42).to_text());
    CHECK(refinement_identity_selftest(1, 7).passed());
}
