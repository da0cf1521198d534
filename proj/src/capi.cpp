#include "orbihom/orbihom.h"

#include "orbihom/affops.hpp"
#include "orbihom/descriptor.hpp"
#include "orbihom/error.hpp"
#include "orbihom/orbmodel.hpp"
#include "orbihom/verify.hpp"

#include "json.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace orbihom;

struct orbihom_complex
{
    OrbifoldDesc desc;
    orbihom_model model;
    WeightedCellComplex cells;
};

struct orbihom_groups
{
    Coefficients coeff;
    std::vector<FgAbGroup> groups;
};

struct orbihom_report
{
    VerdictReport report;
};

namespace {

thread_local std::string last_error;

orbihom_status set_error(orbihom_status s, std::string msg)
{
    last_error = std::move(msg);
    return s;
}

template <class F>
orbihom_status guarded(F&& f)
{
    try {
        last_error.clear();
        return f();
    } catch (Error const& e) {
        switch (e.kind()) {
        case ErrorKind::Input:
            return set_error(ORBIHOM_ERR_INPUT, e.what());
        case ErrorKind::Precondition:
            return set_error(ORBIHOM_ERR_PRECONDITION, e.what());
        case ErrorKind::Internal:
            break;
        }
        return set_error(ORBIHOM_ERR_INTERNAL, e.what());
    } catch (std::bad_alloc const&) {
        return set_error(ORBIHOM_ERR_INTERNAL, "out of memory");
    } catch (std::exception const& e) {
        return set_error(ORBIHOM_ERR_INTERNAL, e.what());
    }
}

char* copy_string(std::string const& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

orbihom_status null_argument(char const* what)
{
    return set_error(ORBIHOM_ERR_ARGUMENT, std::string("null ") + what);
}

std::string render(orbihom_groups const& g, std::size_t q)
{
    FgAbGroup const& x = g.groups[q];
    if (g.coeff == Coefficients::Q) {
        if (x.rank() == 0)
            return "0";
        return x.rank() == 1 ? "Q" : "Q^" + std::to_string(x.rank());
    }
    return x.to_string();
}

orbihom_status make_report(VerdictReport r, orbihom_report** out)
{
    *out = new orbihom_report{std::move(r)};
    return ORBIHOM_OK;
}

template <class F>
orbihom_status verify_with(orbihom_complex const* c, orbihom_report** out, F&& f)
{
    if (!c)
        return null_argument("complex");
    if (!out)
        return null_argument("output pointer");
    return guarded([&] { return make_report(f(), out); });
}

} // namespace

extern "C" {

const char* orbihom_version(void)
{
    return "0.1.0";
}

const char* orbihom_last_error(void)
{
    return last_error.c_str();
}

void orbihom_string_free(char* s)
{
    std::free(s);
}

orbihom_status orbihom_complex_from_desc(const char* desc, orbihom_model model, orbihom_complex** out)
{
    if (!desc)
        return null_argument("descriptor");
    if (!out)
        return null_argument("output pointer");
    return guarded([&] {
        OrbifoldDesc d = parse_descriptor(desc);
        WeightedCellComplex x;
        switch (model) {
        case ORBIHOM_MODEL_T:
            x = t_model(d);
            break;
        case ORBIHOM_MODEL_UNDERLYING:
            x = underlying_model(d);
            break;
        case ORBIHOM_MODEL_WS:
            x = ws_model(d);
            break;
        default:
            return set_error(ORBIHOM_ERR_ARGUMENT, "unknown model kind");
        }
        *out = new orbihom_complex{std::move(d), model, std::move(x)};
        return ORBIHOM_OK;
    });
}

orbihom_status orbihom_complex_from_owc(const char* text, const char* source, orbihom_complex** out)
{
    if (!text)
        return null_argument("text");
    if (!out)
        return null_argument("output pointer");
    return guarded([&] {
        WeightedCellComplex x = parse_owc(text);
        OrbifoldDesc d = OrbifoldDesc::custom(x, source ? source : x.name());
        *out = new orbihom_complex{std::move(d), ORBIHOM_MODEL_T, std::move(x)};
        return ORBIHOM_OK;
    });
}

void orbihom_complex_free(orbihom_complex* c)
{
    delete c;
}

int orbihom_complex_dim(const orbihom_complex* c)
{
    return c ? c->cells.dim() : -1;
}

size_t orbihom_complex_cell_count(const orbihom_complex* c)
{
    return c ? c->cells.cells().size() : 0;
}

orbihom_status orbihom_complex_serialize(const orbihom_complex* c, char** out)
{
    if (!c)
        return null_argument("complex");
    if (!out)
        return null_argument("output pointer");
    return guarded([&] {
        *out = copy_string(serialize_owc(c->cells));
        return ORBIHOM_OK;
    });
}

orbihom_status orbihom_complex_describe(const orbihom_complex* c, char** out)
{
    if (!c)
        return null_argument("complex");
    if (!out)
        return null_argument("output pointer");
    return guarded([&] {
        *out = copy_string(c->desc.to_string());
        return ORBIHOM_OK;
    });
}

orbihom_status orbihom_homology(const orbihom_complex* c, orbihom_coeff coeff, const char* rel_sub,
                                orbihom_groups** out)
{
    if (!c)
        return null_argument("complex");
    if (!out)
        return null_argument("output pointer");
    return guarded([&] {
        Coefficients const k = coeff == ORBIHOM_COEFF_Q ? Coefficients::Q : Coefficients::Z;
        ChainComplex chains = c->cells.chain_complex();
        if (rel_sub)
            chains = relative(chains, c->cells.subcomplex_cells(rel_sub));
        *out = new orbihom_groups{k, homology(chains, k).groups()};
        return ORBIHOM_OK;
    });
}

orbihom_status orbihom_ws_cohomology(const orbihom_complex* c, orbihom_coeff coeff, const char* rel_sub,
                                     orbihom_groups** out)
{
    if (!c)
        return null_argument("complex");
    if (!out)
        return null_argument("output pointer");
    return guarded([&] {
        Coefficients const k = coeff == ORBIHOM_COEFF_Q ? Coefficients::Q : Coefficients::Z;
        LabelSet rel;
        if (rel_sub)
            rel = c->cells.subcomplex_cells(rel_sub);
        *out = new orbihom_groups{k, ws_cohomology(c->cells, rel, k)};
        return ORBIHOM_OK;
    });
}

void orbihom_groups_free(orbihom_groups* g)
{
    delete g;
}

size_t orbihom_groups_count(const orbihom_groups* g)
{
    return g ? g->groups.size() : 0;
}

size_t orbihom_groups_rank(const orbihom_groups* g, size_t q)
{
    return g && q < g->groups.size() ? g->groups[q].rank() : 0;
}

size_t orbihom_groups_torsion_count(const orbihom_groups* g, size_t q)
{
    return g && q < g->groups.size() ? g->groups[q].torsion().size() : 0;
}

orbihom_status orbihom_groups_torsion(const orbihom_groups* g, size_t q, size_t i, char** out)
{
    if (!g)
        return null_argument("groups");
    if (!out)
        return null_argument("output pointer");
    if (q >= g->groups.size() || i >= g->groups[q].torsion().size())
        return set_error(ORBIHOM_ERR_ARGUMENT, "torsion index out of range");
    return guarded([&] {
        *out = copy_string(g->groups[q].torsion()[i].get_str());
        return ORBIHOM_OK;
    });
}

orbihom_status orbihom_groups_render(const orbihom_groups* g, size_t q, char** out)
{
    if (!g)
        return null_argument("groups");
    if (!out)
        return null_argument("output pointer");
    if (q >= g->groups.size())
        return set_error(ORBIHOM_ERR_ARGUMENT, "degree out of range");
    return guarded([&] {
        *out = copy_string(render(*g, q));
        return ORBIHOM_OK;
    });
}

orbihom_status orbihom_groups_json(const orbihom_groups* g, char** out)
{
    if (!g)
        return null_argument("groups");
    if (!out)
        return null_argument("output pointer");
    return guarded([&] {
        nlohmann::ordered_json j;
        j["coefficients"] = g->coeff == Coefficients::Q ? "Q" : "Z";
        auto arr = nlohmann::ordered_json::array();
        for (std::size_t q = 0; q < g->groups.size(); ++q) {
            nlohmann::ordered_json d;
            d["degree"] = q;
            d["rank"] = g->groups[q].rank();
            auto tors = nlohmann::ordered_json::array();
            for (auto const& t : g->groups[q].torsion())
                tors.push_back(t.get_str());
            d["torsion"] = std::move(tors);
            d["text"] = render(*g, q);
            arr.push_back(std::move(d));
        }
        j["groups"] = std::move(arr);
        *out = copy_string(j.dump(2));
        return ORBIHOM_OK;
    });
}

orbihom_status orbihom_verify_mv(const orbihom_complex* c, const char* sub_a, const char* sub_b,
                                 orbihom_report** out)
{
    if (!sub_a || !sub_b)
        return null_argument("subcomplex name");
    return verify_with(c, out, [&] {
        VerdictReport r = check_mv(c->cells, c->cells.subcomplex_cells(sub_a), c->cells.subcomplex_cells(sub_b));
        r.input = c->desc.to_string() + " = " + sub_a + " u " + sub_b;
        return r;
    });
}

orbihom_status orbihom_verify_kunneth(const orbihom_complex* c, int torus_k, orbihom_report** out)
{
    return verify_with(c, out, [&] { return check_kunneth(c->desc, torus_k); });
}

orbihom_status orbihom_verify_rational(const orbihom_complex* c, orbihom_report** out)
{
    return verify_with(c, out, [&] { return check_rational(c->desc); });
}

orbihom_status orbihom_verify_underlying(const orbihom_complex* c, orbihom_report** out)
{
    return verify_with(c, out, [&] { return check_underlying(c->desc); });
}

orbihom_status orbihom_verify_hurewicz(const orbihom_complex* c, orbihom_report** out)
{
    return verify_with(c, out, [&] { return check_hurewicz(c->desc); });
}

orbihom_status orbihom_verify_duality(const orbihom_complex* c, orbihom_report** out)
{
    return verify_with(c, out, [&] { return check_duality(c->desc); });
}

orbihom_status orbihom_verify_bhomotopy(const orbihom_complex* a, const orbihom_complex* b, orbihom_report** out)
{
    if (!b)
        return null_argument("complex");
    return verify_with(a, out, [&] { return check_bhomotopy_pair(a->desc, b->desc); });
}

orbihom_status orbihom_affops_selftest(size_t trials, uint64_t seed, orbihom_report** out)
{
    if (!out)
        return null_argument("output pointer");
    return guarded([&] { return make_report(affops::refinement_identity_selftest(trials, seed), out); });
}

void orbihom_report_free(orbihom_report* r)
{
    delete r;
}

int orbihom_report_passed(const orbihom_report* r)
{
    return r && r->report.passed() ? 1 : 0;
}

size_t orbihom_report_assertion_count(const orbihom_report* r)
{
    return r ? r->report.assertions.size() : 0;
}

size_t orbihom_report_failure_count(const orbihom_report* r)
{
    return r ? r->report.failures() : 0;
}

orbihom_status orbihom_report_text(const orbihom_report* r, char** out)
{
    if (!r)
        return null_argument("report");
    if (!out)
        return null_argument("output pointer");
    return guarded([&] {
        *out = copy_string(r->report.to_text());
        return ORBIHOM_OK;
    });
}

orbihom_status orbihom_report_json(const orbihom_report* r, char** out)
{
    if (!r)
        return null_argument("report");
    if (!out)
        return null_argument("output pointer");
    return guarded([&] {
        *out = copy_string(r->report.to_json());
        return ORBIHOM_OK;
    });
}

} // extern "C"
