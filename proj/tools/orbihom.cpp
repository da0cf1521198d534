// orbihom: homology, ws-cohomology and verdicts for orbifold models.
// Exit status: 0 success or PASS, 1 verification FAIL, 2 input error.

#include "orbihom/orbihom.h"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

struct Styles
{
    bool on = false;
    std::string pass(std::string const& s) const { return on ? "\033[32m" + s + "\033[0m" : s; }
    std::string fail(std::string const& s) const { return on ? "\033[31m" + s + "\033[0m" : s; }
    std::string bold(std::string const& s) const { return on ? "\033[1m" + s + "\033[0m" : s; }
};

Styles styles()
{
    char const* env = std::getenv("ORBIHOM_COLOR");
    if (env && std::string(env) == "0")
        return {};
    return {isatty(STDOUT_FILENO) != 0};
}

// Owned C string from the library.
std::string take(char* s)
{
    std::string out = s ? s : "";
    orbihom_string_free(s);
    return out;
}

struct InputError
{
    std::string message;
};

void check(orbihom_status s)
{
    if (s != ORBIHOM_OK)
        throw InputError{orbihom_last_error()};
}

using ComplexPtr = std::unique_ptr<orbihom_complex, decltype(&orbihom_complex_free)>;
using GroupsPtr = std::unique_ptr<orbihom_groups, decltype(&orbihom_groups_free)>;
using ReportPtr = std::unique_ptr<orbihom_report, decltype(&orbihom_report_free)>;

struct Source
{
    std::string desc;
    std::string file;

    void attach(CLI::App* app)
    {
        auto* d = app->add_option("--desc", desc, "orbifold descriptor, e.g. \"surface(1,2;3)\"");
        auto* f = app->add_option("--file", file, ".owc file");
        d->excludes(f);
    }

    ComplexPtr load(orbihom_model model) const
    {
        orbihom_complex* c = nullptr;
        if (!desc.empty() == !file.empty())
            throw InputError{"exactly one of --desc and --file is required"};
        if (!desc.empty()) {
            check(orbihom_complex_from_desc(desc.c_str(), model, &c));
        } else {
            std::ifstream in(file);
            if (!in)
                throw InputError{"cannot read " + file};
            std::stringstream text;
            text << in.rdbuf();
            std::string const body = text.str();
            orbihom_status const s = orbihom_complex_from_owc(body.c_str(), file.c_str(), &c);
            if (s != ORBIHOM_OK)
                throw InputError{file + ": " + orbihom_last_error()};
        }
        return ComplexPtr(c, orbihom_complex_free);
    }
};

orbihom_model parse_model(std::string const& m)
{
    if (m == "t")
        return ORBIHOM_MODEL_T;
    if (m == "underlying")
        return ORBIHOM_MODEL_UNDERLYING;
    return ORBIHOM_MODEL_WS;
}

int print_groups(orbihom_groups const* g, char const* prefix, bool json, bool table, Styles const& st)
{
    if (json) {
        char* s = nullptr;
        check(orbihom_groups_json(g, &s));
        std::cout << take(s) << "\n";
        return exit_ok;
    }
    std::size_t const n = orbihom_groups_count(g);
    if (table) {
        std::cout << st.bold("  q  group") << "\n";
        for (std::size_t q = 0; q < n; ++q) {
            char* s = nullptr;
            check(orbihom_groups_render(g, q, &s));
            std::cout << "  " << q << "  " << take(s) << "\n";
        }
        return exit_ok;
    }
    for (std::size_t q = 0; q < n; ++q) {
        char* s = nullptr;
        check(orbihom_groups_render(g, q, &s));
        std::cout << prefix << q << " = " << take(s) << "\n";
    }
    return exit_ok;
}

int print_report(orbihom_report const* r, bool json, Styles const& st)
{
    char* s = nullptr;
    if (json) {
        check(orbihom_report_json(r, &s));
        std::cout << take(s) << "\n";
    } else {
        check(orbihom_report_text(r, &s));
        std::istringstream lines(take(s));
        std::string line;
        while (std::getline(lines, line)) {
            if (line.rfind("PASS", 0) == 0 || line == "RESULT PASS")
                line = st.pass(line);
            else if (line.rfind("FAIL", 0) == 0 || line == "RESULT FAIL")
                line = st.fail(line);
            std::cout << line << "\n";
        }
    }
    return orbihom_report_passed(r) ? exit_ok : exit_fail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Orbifold homology from weighted cellular models"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(orbihom_version()));

    Styles const st = styles();
    std::optional<int> result;

    // homology / ws-cohomology
    struct GroupCommand
    {
        Source src;
        std::string coeff = "z";
        std::string rel;
        std::string model;
        bool json = false;
        bool table = false;
    };
    GroupCommand hom, cohom;
    hom.model = "t";
    cohom.model = "ws";
    auto add_group_command = [&](char const* name, char const* help, GroupCommand& cmd) {
        CLI::App* sub = app.add_subcommand(name, help);
        cmd.src.attach(sub);
        sub->add_option("--coeff", cmd.coeff, "coefficients")->check(CLI::IsMember({"z", "q", "Z", "Q"}));
        sub->add_option("--rel", cmd.rel, "relative to a named subcomplex, e.g. boundary");
        sub->add_option("--model", cmd.model, "cell model for --desc")
            ->check(CLI::IsMember({"t", "underlying", "ws"}));
        sub->add_flag("--json", cmd.json, "JSON output");
        sub->add_flag("--table", cmd.table, "aligned table");
        return sub;
    };
    CLI::App* homology = add_group_command("homology", "t-homology (or homology of the chosen model)", hom);
    CLI::App* ws = add_group_command("ws-cohomology", "ws-cohomology", cohom);

    auto run_groups = [&](GroupCommand const& cmd, bool cohomology) {
        ComplexPtr c = cmd.src.load(parse_model(cmd.model));
        orbihom_coeff const k = (cmd.coeff == "q" || cmd.coeff == "Q") ? ORBIHOM_COEFF_Q : ORBIHOM_COEFF_Z;
        orbihom_groups* g = nullptr;
        char const* rel = cmd.rel.empty() ? nullptr : cmd.rel.c_str();
        check(cohomology ? orbihom_ws_cohomology(c.get(), k, rel, &g) : orbihom_homology(c.get(), k, rel, &g));
        GroupsPtr owned(g, orbihom_groups_free);
        return print_groups(g, cohomology ? "H^" : "H_", cmd.json, cmd.table, st);
    };
    homology->callback([&] { result = run_groups(hom, false); });
    ws->callback([&] { result = run_groups(cohom, true); });

    // serialize
    Source ser_src;
    std::string ser_model = "t";
    CLI::App* ser = app.add_subcommand("serialize", "write the cell model as .owc");
    ser_src.attach(ser);
    ser->add_option("--model", ser_model, "cell model")->check(CLI::IsMember({"t", "underlying", "ws"}));
    ser->callback([&] {
        ComplexPtr c = ser_src.load(parse_model(ser_model));
        char* s = nullptr;
        check(orbihom_complex_serialize(c.get(), &s));
        std::cout << take(s);
        result = exit_ok;
    });

    // verify
    CLI::App* verify = app.add_subcommand("verify", "theorem checks");
    verify->require_subcommand(1);
    Source vsrc;
    std::vector<std::string> subs;
    int torus_k = 1;
    std::string model_name = "t";
    std::string desc_a, desc_b;
    bool vjson = false;
    auto add_check = [&](char const* name, char const* help) {
        CLI::App* sub = verify->add_subcommand(name, help);
        sub->add_flag("--json", vjson, "JSON report");
        return sub;
    };
    CLI::App* mv = add_check("mv", "Mayer-Vietoris exactness for a two-subcomplex cover");
    vsrc.attach(mv);
    mv->add_option("--sub", subs, "covering subcomplex (twice)")->expected(2)->required();
    mv->add_option("--model", model_name, "cell model")->check(CLI::IsMember({"t", "underlying", "ws"}));
    CLI::App* kun = add_check("kunneth", "product with a torus against the tensor formula");
    vsrc.attach(kun);
    kun->add_option("--torus", torus_k, "torus factor count")->check(CLI::NonNegativeNumber);
    std::vector<std::pair<CLI::App*, orbihom_status (*)(orbihom_complex const*, orbihom_report**)>> simple;
    for (auto [name, help, fn] :
         {std::tuple{"rational", "rational ranks", &orbihom_verify_rational},
          std::tuple{"underlying", "weights-to-1 model against |M|", &orbihom_verify_underlying},
          std::tuple{"hurewicz", "abelianized pi_1 against H_1", &orbihom_verify_hurewicz},
          std::tuple{"duality", "ws-cohomology against t-homology", &orbihom_verify_duality}}) {
        CLI::App* sub = add_check(name, help);
        vsrc.attach(sub);
        simple.emplace_back(sub, fn);
    }
    CLI::App* bh = add_check("bhomotopy", "degreewise comparison of two descriptors");
    bh->add_option("--a", desc_a, "first descriptor")->required();
    bh->add_option("--b", desc_b, "second descriptor")->required();

    auto finish = [&](orbihom_report* r) {
        ReportPtr owned(r, orbihom_report_free);
        result = print_report(r, vjson, st);
    };
    mv->callback([&] {
        ComplexPtr c = vsrc.load(parse_model(model_name));
        orbihom_report* r = nullptr;
        check(orbihom_verify_mv(c.get(), subs.at(0).c_str(), subs.at(1).c_str(), &r));
        finish(r);
    });
    kun->callback([&] {
        ComplexPtr c = vsrc.load(ORBIHOM_MODEL_T);
        orbihom_report* r = nullptr;
        check(orbihom_verify_kunneth(c.get(), torus_k, &r));
        finish(r);
    });
    for (auto& [sub, fn] : simple) {
        auto f = fn;
        sub->callback([&, f] {
            ComplexPtr c = vsrc.load(ORBIHOM_MODEL_T);
            orbihom_report* r = nullptr;
            check(f(c.get(), &r));
            finish(r);
        });
    }
    bh->callback([&] {
        orbihom_complex* a = nullptr;
        orbihom_complex* b = nullptr;
        check(orbihom_complex_from_desc(desc_a.c_str(), ORBIHOM_MODEL_T, &a));
        ComplexPtr ca(a, orbihom_complex_free);
        check(orbihom_complex_from_desc(desc_b.c_str(), ORBIHOM_MODEL_T, &b));
        ComplexPtr cb(b, orbihom_complex_free);
        orbihom_report* r = nullptr;
        check(orbihom_verify_bhomotopy(a, b, &r));
        finish(r);
    });

    // affops
    CLI::App* aff = app.add_subcommand("affops", "affine chain operators");
    aff->require_subcommand(1);
    CLI::App* selftest = aff->add_subcommand("selftest", "random trials of the refinement identities");
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    selftest->add_option("--trials", trials, "trial count")->check(CLI::PositiveNumber);
    selftest->add_option("--seed", seed, "RNG seed");
    selftest->add_flag("--json", vjson, "JSON report");
    selftest->callback([&] {
        orbihom_report* r = nullptr;
        check(orbihom_affops_selftest(trials, seed, &r));
        finish(r);
    });

    try {
        app.parse(argc, argv);
    } catch (CLI::Success const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return exit_input;
    } catch (InputError const& e) {
        std::cerr << "orbihom: " << e.message << "\n";
        return exit_input;
    }
    return result.value_or(exit_ok);
}
