#include "orbihom/groups.hpp"

#include "orbihom/error.hpp"

#include <algorithm>

namespace orbihom {

Word free_reduce(Word w)
{
    Word out;
    out.reserve(w.size());
    for (Letter const& l : w) {
        if (l.second == 0)
            continue;
        if (!out.empty() && out.back().first == l.first) {
            out.back().second += l.second;
            if (out.back().second == 0)
                out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word inverse(Word const& w)
{
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.emplace_back(it->first, -it->second);
    return out;
}

Word concat(Word const& w, Word const& v)
{
    Word out = w;
    out.insert(out.end(), v.begin(), v.end());
    return free_reduce(std::move(out));
}

Word power(std::size_t g, long e)
{
    return free_reduce({{g, e}});
}

Word commutator(Word const& a, Word const& b)
{
    return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

std::size_t Presentation::add_generator(std::string name)
{
    generators_.push_back(std::move(name));
    return generators_.size() - 1;
}

void Presentation::add_relator(Word w)
{
    for (Letter const& l : w)
        if (l.first >= generators_.size())
            fail_input("relator names generator " + std::to_string(l.first) + " of " +
                       std::to_string(generators_.size()));
    relators_.push_back(free_reduce(std::move(w)));
}

std::size_t Presentation::index_of(std::string const& name) const
{
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end())
        fail_input("unknown generator '" + name + "'");
    return static_cast<std::size_t>(it - generators_.begin());
}

IntMatrix Presentation::exponent_matrix() const
{
    IntMatrix m(generators_.size(), relators_.size());
    for (std::size_t j = 0; j < relators_.size(); ++j)
        for (Letter const& l : relators_[j])
            m(l.first, j) += l.second;
    return m;
}

std::string Presentation::to_string() const
{
    std::string s = "<";
    for (std::size_t i = 0; i < generators_.size(); ++i)
        s += (i ? ", " : "") + generators_[i];
    s += " | ";
    for (std::size_t j = 0; j < relators_.size(); ++j) {
        if (j)
            s += ", ";
        if (relators_[j].empty())
            s += "1";
        for (std::size_t k = 0; k < relators_[j].size(); ++k) {
            auto const& [g, e] = relators_[j][k];
            s += (k ? " " : "") + generators_[g];
            if (e != 1)
                s += "^" + std::to_string(e);
        }
    }
    return s + ">";
}

namespace {

Presentation cyclic(long n)
{
    Presentation p({"x"});
    p.add_relator(power(0, n));
    return p;
}

} // namespace

Presentation pi1_presentation(OrbifoldDesc const& d)
{
    if (auto const* p = std::get_if<desc::Disc2>(&d.value))
        return cyclic(p->n);
    if (auto const* p = std::get_if<desc::Ball3Cyclic>(&d.value))
        return cyclic(p->n);
    if (auto const* p = std::get_if<desc::Ball3>(&d.value)) {
        if (!is_spherical_triple(p->m1, p->m2, p->m3))
            fail_input(d.to_string() + " is not a spherical triple");
        Presentation g({"x", "y", "z"});
        g.add_relator(power(0, p->m1));
        g.add_relator(power(1, p->m2));
        g.add_relator(power(2, p->m3));
        g.add_relator({{0, 1}, {1, 1}, {2, 1}});
        return g;
    }
    if (auto const* p = std::get_if<desc::Surface>(&d.value)) {
        Presentation g;
        std::vector<std::size_t> a, b, x, s;
        for (long k = 1; k <= p->genus; ++k) {
            a.push_back(g.add_generator("a" + std::to_string(k)));
            b.push_back(g.add_generator("b" + std::to_string(k)));
        }
        for (std::size_t i = 1; i <= p->cones.size(); ++i)
            x.push_back(g.add_generator("x" + std::to_string(i)));
        for (long j = 1; j <= p->boundary; ++j)
            s.push_back(g.add_generator("s" + std::to_string(j)));
        for (std::size_t i = 0; i < x.size(); ++i)
            g.add_relator(power(x[i], p->cones[i]));
        Word long_rel;
        for (std::size_t xi : x)
            long_rel = concat(long_rel, power(xi, 1));
        for (std::size_t sj : s)
            long_rel = concat(long_rel, power(sj, 1));
        for (std::size_t k = 0; k < a.size(); ++k)
            long_rel = concat(long_rel, commutator(power(a[k], 1), power(b[k], 1)));
        g.add_relator(long_rel);
        return g;
    }
    if (auto const* p = std::get_if<desc::ProductTorus>(&d.value)) {
        Presentation g = pi1_presentation(*p->base);
        std::size_t const base_gens = g.generators().size();
        std::vector<std::size_t> t;
        for (int i = 1; i <= p->k; ++i)
            t.push_back(g.add_generator("t" + std::to_string(i)));
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t h = 0; h < base_gens; ++h)
                g.add_relator(commutator(power(t[i], 1), power(h, 1)));
            for (std::size_t j = i + 1; j < t.size(); ++j)
                g.add_relator(commutator(power(t[i], 1), power(t[j], 1)));
        }
        return g;
    }
    fail_input("no presentation can be inferred for a custom complex (" +
               std::get<desc::Custom>(d.value).source + ")");
}

FgAbGroup abelianization(Presentation const& p)
{
    return cokernel_group(p.exponent_matrix());
}

} // namespace orbihom
