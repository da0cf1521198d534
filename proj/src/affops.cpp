#include "orbihom/affops.hpp"

#include "orbihom/error.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace orbihom::affops {

Point AffineSimplex::evaluate(std::vector<Rational> const& bary) const
{
    if (bary.size() != vertices.size())
        fail_input("barycentric coordinate count does not match the vertex count");
    Point p(ambient());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t k = 0; k < p.size(); ++k)
            p[k] += bary[i] * vertices[i][k];
    return p;
}

std::string AffineSimplex::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        s += i ? " (" : "(";
        for (std::size_t k = 0; k < vertices[i].size(); ++k)
            s += (k ? "," : "") + vertices[i][k].get_str();
        s += ")";
    }
    return s + "]";
}

bool SimplexLess::operator()(AffineSimplex const& a, AffineSimplex const& b) const
{
    if (a.vertices.size() != b.vertices.size())
        return a.vertices.size() < b.vertices.size();
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        Point const& p = a.vertices[i];
        Point const& q = b.vertices[i];
        if (p.size() != q.size())
            return p.size() < q.size();
        for (std::size_t k = 0; k < p.size(); ++k) {
            int c = cmp(p[k], q[k]);
            if (c != 0)
                return c < 0;
        }
    }
    return false;
}

void AffineChain::add(AffineSimplex s, Integer const& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(std::move(s), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void AffineChain::add(AffineChain const& other, Integer const& scale)
{
    for (auto const& [s, c] : other.terms_)
        add(s, c * scale);
}

int AffineChain::degree() const
{
    int d = -1;
    for (auto const& [s, c] : terms_) {
        if (d >= 0 && s.degree() != d)
            fail_input("chain mixes degrees " + std::to_string(d) + " and " + std::to_string(s.degree()));
        d = s.degree();
    }
    return d;
}

std::string AffineChain::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto const& [s, c] : terms_) {
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        Integer a = abs(c);
        if (a != 1)
            out += a.get_str() + "*";
        out += s.to_string();
    }
    return out;
}

AffineChain operator+(AffineChain a, AffineChain const& b)
{
    a.add(b);
    return a;
}

AffineChain operator-(AffineChain a, AffineChain const& b)
{
    a.add(b, -1);
    return a;
}

AffineChain boundary(AffineSimplex const& s)
{
    if (s.degree() < 1)
        fail_input("boundary of a chain of degree " + std::to_string(s.degree()));
    AffineChain out;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        AffineSimplex f;
        for (std::size_t k = 0; k < s.vertices.size(); ++k)
            if (k != i)
                f.vertices.push_back(s.vertices[k]);
        out.add(std::move(f), i % 2 == 0 ? 1 : -1);
    }
    return out;
}

AffineChain boundary(AffineChain const& c)
{
    c.degree();
    AffineChain out;
    for (auto const& [s, coeff] : c.terms())
        out.add(boundary(s), coeff);
    return out;
}

void Refinement::validate() const
{
    if (phi.vertices.empty())
        fail_input("refinement simplex has no vertices");
    if (a.size() != phi.vertices.size())
        fail_input("interior point needs " + std::to_string(phi.vertices.size()) + " barycentric coordinates");
    Rational sum = 0;
    for (auto const& x : a) {
        if (x <= 0)
            fail_input("point is not interior: barycentric coordinate " + x.get_str() + " <= 0");
        sum += x;
    }
    if (sum != 1)
        fail_input("barycentric coordinates sum to " + sum.get_str());
}

std::optional<std::vector<std::size_t>> match_face(AffineSimplex const& psi, AffineSimplex const& phi)
{
    std::size_t const n = psi.vertices.size();
    std::size_t const m = phi.vertices.size();
    if (m == 0 || m > n)
        return std::nullopt;
    // Depth-first over increasing tuples in lexicographic order.
    std::vector<std::size_t> idx;
    std::function<bool(std::size_t)> go = [&](std::size_t start) {
        if (idx.size() == m)
            return true;
        for (std::size_t i = start; i + (m - idx.size()) <= n; ++i) {
            if (psi.vertices[i] != phi.vertices[idx.size()])
                continue;
            idx.push_back(i);
            if (go(i + 1))
                return true;
            idx.pop_back();
        }
        return false;
    };
    if (go(0))
        return idx;
    return std::nullopt;
}

namespace {

int sign(std::size_t e)
{
    return e % 2 == 0 ? 1 : -1;
}

// Vertex list of the k-th refinement term: x_0 .. x_{i_p} without x_{i_k},
// then a', then x_{i_p+1} .. x_q.
std::vector<Point> refined_vertices(AffineSimplex const& psi, std::vector<std::size_t> const& face, std::size_t k,
                                    Point const& a_prime)
{
    std::size_t const ip = face.back();
    std::vector<Point> v;
    for (std::size_t i = 0; i <= ip; ++i)
        if (i != face[k])
            v.push_back(psi.vertices[i]);
    v.push_back(a_prime);
    for (std::size_t i = ip + 1; i < psi.vertices.size(); ++i)
        v.push_back(psi.vertices[i]);
    return v;
}

Point a_prime(Refinement const& r)
{
    return r.phi.evaluate(r.a);
}

AffineSimplex doubled(AffineSimplex const& psi, std::size_t j)
{
    AffineSimplex s;
    for (std::size_t i = 0; i < psi.vertices.size(); ++i) {
        s.vertices.push_back(psi.vertices[i]);
        if (i == j)
            s.vertices.push_back(psi.vertices[i]);
    }
    return s;
}

} // namespace

AffineChain refine(AffineSimplex const& psi, Refinement const& r)
{
    r.validate();
    auto face = match_face(psi, r.phi);
    if (!face)
        return AffineChain(psi);
    Point const ap = a_prime(r);
    std::size_t const ip = face->back();
    AffineChain out;
    for (std::size_t k = 0; k < face->size(); ++k)
        out.add(AffineSimplex{refined_vertices(psi, *face, k, ap)}, sign((*face)[k] + ip));
    return out;
}

AffineChain refine(AffineChain const& c, Refinement const& r)
{
    c.degree();
    AffineChain out;
    for (auto const& [s, coeff] : c.terms())
        out.add(refine(s, r), coeff);
    return out;
}

AffineChain prism(AffineSimplex const& psi, Refinement const& r)
{
    r.validate();
    std::size_t const q = psi.vertices.size() - 1;
    auto face = match_face(psi, r.phi);
    AffineChain out;
    for (std::size_t j = 0; j <= q; ++j) {
        int const outer = sign(j + 1);
        if (!face || j > face->front()) {
            out.add(doubled(psi, j), outer);
            continue;
        }
        // x_0 .. x_j followed by positions j.. of the k-th refined vertex list
        Point const ap = a_prime(r);
        std::size_t const ip = face->back();
        for (std::size_t k = 0; k < face->size(); ++k) {
            std::vector<Point> top = refined_vertices(psi, *face, k, ap);
            AffineSimplex s;
            for (std::size_t i = 0; i <= j; ++i)
                s.vertices.push_back(psi.vertices[i]);
            for (std::size_t i = j; i < top.size(); ++i)
                s.vertices.push_back(top[i]);
            out.add(std::move(s), outer * sign((*face)[k] + ip));
        }
    }
    return out;
}

AffineChain prism(AffineChain const& c, Refinement const& r)
{
    c.degree();
    AffineChain out;
    for (auto const& [s, coeff] : c.terms())
        out.add(prism(s, r), coeff);
    return out;
}

Refinement face_refinement(AffineSimplex const& psi, std::vector<std::size_t> const& face, std::vector<Rational> a)
{
    Refinement r;
    for (std::size_t k = 0; k < face.size(); ++k) {
        if (face[k] >= psi.vertices.size() || (k > 0 && face[k] <= face[k - 1]))
            fail_input("face indices must be increasing and within the simplex");
        r.phi.vertices.push_back(psi.vertices[face[k]]);
    }
    r.a = std::move(a);
    r.validate();
    return r;
}

// ---------------------------------------------------------------- self-test

namespace {

struct Draw
{
    std::mt19937_64 gen;

    long uniform(long lo, long hi) // inclusive; modulo keeps runs reproducible across libraries
    {
        return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational coordinate()
    {
        Rational x(uniform(-8, 8), uniform(1, 8));
        x.canonicalize();
        return x;
    }

    AffineSimplex simplex(std::size_t q, std::size_t dim)
    {
        for (;;) {
            AffineSimplex s;
            for (std::size_t i = 0; i <= q; ++i) {
                Point p(dim);
                for (auto& x : p)
                    x = coordinate();
                s.vertices.push_back(std::move(p));
            }
            bool distinct = true;
            for (std::size_t i = 0; i <= q && distinct; ++i)
                for (std::size_t k = i + 1; k <= q; ++k)
                    if (s.vertices[i] == s.vertices[k])
                        distinct = false;
            if (distinct)
                return s;
        }
    }

    std::vector<std::size_t> face(std::size_t q, std::size_t p)
    {
        std::vector<std::size_t> all(q + 1);
        for (std::size_t i = 0; i <= q; ++i)
            all[i] = i;
        for (std::size_t i = 0; i <= p; ++i)
            std::swap(all[i], all[i + static_cast<std::size_t>(uniform(0, static_cast<long>(q - i)))]);
        std::vector<std::size_t> f(all.begin(), all.begin() + static_cast<long>(p + 1));
        std::sort(f.begin(), f.end());
        return f;
    }

    std::vector<Rational> interior(std::size_t p)
    {
        std::vector<Rational> a(p + 1);
        long total = 0;
        std::vector<long> w(p + 1);
        for (auto& x : w) {
            x = uniform(1, 8);
            total += x;
        }
        for (std::size_t i = 0; i <= p; ++i) {
            a[i] = Rational(w[i], total);
            a[i].canonicalize();
        }
        return a;
    }
};

} // namespace

VerdictReport refinement_identity_selftest(std::size_t trials, std::uint64_t seed)
{
    if (trials < 1)
        fail_input("selftest needs at least one trial");
    VerdictReport report;
    report.check = "affops";
    report.input = "trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);
    report.notes.push_back("signs as printed: (-1)^(i_k+i_p) in Sd and in P^j for j <= i_0, (-1)^(j+1) in P");

    Draw draw{std::mt19937_64(seed)};
    std::size_t ok_sd = 0, ok_prism = 0, face_trials = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t const q = static_cast<std::size_t>(draw.uniform(1, 4));
        std::size_t const p = static_cast<std::size_t>(draw.uniform(1, static_cast<long>(q)));
        std::size_t const dim = static_cast<std::size_t>(draw.uniform(1, 3));
        AffineSimplex const psi = draw.simplex(q, dim);
        std::vector<std::size_t> const f = draw.face(q, p);
        std::vector<Rational> const a = draw.interior(p);

        Refinement r;
        bool const off_face = draw.uniform(0, 4) == 0;
        if (off_face) {
            r.phi = draw.simplex(p, dim);
            r.a = a;
        } else {
            r = face_refinement(psi, f, a);
        }
        face_trials += match_face(psi, r.phi) ? 1 : 0;

        AffineChain const sd = refine(psi, r);
        AffineChain const d = boundary(psi);
        AffineChain const lhs1 = boundary(sd);
        AffineChain const rhs1 = refine(d, r);
        if (lhs1 == rhs1)
            ++ok_sd;
        else
            report.notes.push_back("trial " + std::to_string(t) + " dSd != Sd d: psi = " + psi.to_string() +
                                   ", phi = " + r.phi.to_string() + "; lhs " + lhs1.to_string() + "; rhs " +
                                   rhs1.to_string());

        AffineChain const lhs2 = boundary(prism(psi, r));
        AffineChain const rhs2 = AffineChain(psi) - sd - prism(d, r);
        if (lhs2 == rhs2)
            ++ok_prism;
        else
            report.notes.push_back("trial " + std::to_string(t) + " dP != id - Sd - Pd: psi = " + psi.to_string() +
                                   ", phi = " + r.phi.to_string() + "; lhs " + lhs2.to_string() + "; rhs " +
                                   rhs2.to_string());
    }
    report.notes.push_back(std::to_string(face_trials) + " of " + std::to_string(trials) +
                           " trials refine along a face");
    report.add("dSd = Sd d", std::to_string(ok_sd) + " of " + std::to_string(trials), std::to_string(trials),
               ok_sd == trials);
    report.add("dP = id - Sd - Pd", std::to_string(ok_prism) + " of " + std::to_string(trials),
               std::to_string(trials), ok_prism == trials);
    return report;
}

} // namespace orbihom::affops
