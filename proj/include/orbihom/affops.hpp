#ifndef ORBIHOM_AFFOPS_HPP
#define ORBIHOM_AFFOPS_HPP

// Affine singular chains with exact rational vertices, the refinement
// operator Sd_(phi,a) and its prism P_(phi,a).

#include "orbihom/intlin.hpp"
#include "orbihom/verify.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbihom::affops {

using Rational = mpq_class;
using Point = std::vector<Rational>;

/// Ordered vertex list; degenerate (repeated) vertices are allowed.
struct AffineSimplex
{
    std::vector<Point> vertices;

    int degree() const { return static_cast<int>(vertices.size()) - 1; }
    std::size_t ambient() const { return vertices.empty() ? 0 : vertices.front().size(); }

    /// Image of a point of the standard simplex given in barycentric
    /// coordinates.
    Point evaluate(std::vector<Rational> const& bary) const;

    std::string to_string() const;

    friend bool operator==(AffineSimplex const&, AffineSimplex const&) = default;
};

struct SimplexLess
{
    bool operator()(AffineSimplex const& a, AffineSimplex const& b) const;
};

class AffineChain
{
public:
    AffineChain() = default;
    AffineChain(AffineSimplex s, Integer coeff = 1) { add(std::move(s), coeff); }

    void add(AffineSimplex s, Integer const& coeff);
    void add(AffineChain const& other, Integer const& scale = 1);

    /// -1 for the zero chain. Throws Error(Input) for mixed degrees.
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::map<AffineSimplex, Integer, SimplexLess> const& terms() const { return terms_; }

    std::string to_string() const;

    friend AffineChain operator+(AffineChain a, AffineChain const& b);
    friend AffineChain operator-(AffineChain a, AffineChain const& b);
    friend bool operator==(AffineChain const& a, AffineChain const& b) { return a.terms_ == b.terms_; }

private:
    std::map<AffineSimplex, Integer, SimplexLess> terms_;
};

/// sum_i (-1)^i (vertex i deleted); degree must be >= 1.
AffineChain boundary(AffineSimplex const& s);
AffineChain boundary(AffineChain const& c);

/// The pair (phi, a): a p-simplex and a strictly interior point of the
/// standard p-simplex in barycentric coordinates.
struct Refinement
{
    AffineSimplex phi;
    std::vector<Rational> a;

    /// Throws Error(Input) unless a has p+1 positive entries summing to 1.
    void validate() const;
};

/// Lexicographically first increasing index tuple (i_0..i_p) with
/// psi restricted to it equal to phi, if any.
std::optional<std::vector<std::size_t>> match_face(AffineSimplex const& psi, AffineSimplex const& phi);

AffineChain refine(AffineSimplex const& psi, Refinement const& r);
AffineChain refine(AffineChain const& c, Refinement const& r);
AffineChain prism(AffineSimplex const& psi, Refinement const& r);
AffineChain prism(AffineChain const& c, Refinement const& r);

/// Refinement along the face of psi with the given indices.
Refinement face_refinement(AffineSimplex const& psi, std::vector<std::size_t> const& face,
                           std::vector<Rational> a);

/// Random trials of dSd = Sd d and dP = id - Sd - P d as exact chain
/// equalities.
VerdictReport refinement_identity_selftest(std::size_t trials, std::uint64_t seed);

} // namespace orbihom::affops

#endif
