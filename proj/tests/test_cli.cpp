#include "doctest.h"

#include <cstdio>
#include <regex>
#include <string>
#include <sys/wait.h>

namespace {

struct Run
{
    int code = -1;
    std::string out;
};

Run run(std::string const& args)
{
    std::string const cmd = "ORBIHOM_COLOR=0 '" ORBIHOM_CLI "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    Run r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    int const status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// H_<q> = 0 or Z^<r> + Z/<d1> + ... with free part first and d1 | d2 | ...
bool parse_group_line(std::string const& line, char sep)
{
    std::regex const head(std::string("^H\\") + sep + "([0-9]+) = (.*)$");
    std::smatch m;
    if (!std::regex_match(line, m, head))
        return false;
    std::string const body = m[2];
    if (body == "0")
        return true;
    std::regex const term("(Z(\\^([0-9]+))?|Z/([0-9]+))");
    long prev = 0;
    bool seen_free = false;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t const end = body.find(" + ", pos);
        std::string const t = body.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        std::smatch tm;
        if (!std::regex_match(t, tm, term))
            return false;
        if (tm[4].matched) {
            long const d = std::stol(tm[4]);
            if (d < 2 || (prev && d % prev != 0))
                return false;
            prev = d;
        } else {
            if (seen_free || prev)
                return false;
            seen_free = true;
        }
        if (end == std::string::npos)
            break;
        pos = end + 3;
    }
    return true;
}

std::vector<std::string> lines(std::string const& s)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t const nl = s.find('\n', pos);
        out.push_back(s.substr(pos, nl - pos));
        if (nl == std::string::npos)
            break;
        pos = nl + 1;
    }
    return out;
}

} // namespace

TEST_CASE("homology of disc2(5)")
{
    Run const r = run("homology --desc 'disc2(5)'");
    CHECK(r.code == 0);
    CHECK(r.out == "H_0 = Z\nH_1 = Z/5\nH_2 = 0\n");
}

TEST_CASE("verify hurewicz on ball3(2,3,5)")
{
    Run const r = run("verify hurewicz --desc 'ball3(2,3,5)'");
    CHECK(r.code == 0);
    CHECK(r.out.find("RESULT PASS\n") != std::string::npos);
}

TEST_CASE("b-homotopy negative control")
{
    Run const r = run("verify bhomotopy --a 'disc2(2)' --b 'disc2(3)'");
    CHECK(r.code == 1);
    CHECK(r.out.find("RESULT FAIL\n") != std::string::npos);
    CHECK(run("verify bhomotopy --a 'ball3cyclic(4)' --b 'disc2(4)'").code == 0);
}

TEST_CASE("input errors exit with 2")
{
    CHECK(run("homology --desc 'disc2(5'").code == 2);
    CHECK(run("homology --desc 'ball3(3,3,3)'").code == 2);
    CHECK(run("homology").code == 2);
    CHECK(run("homology --desc 'disc2(5)' --file x.owc").code == 2);
    CHECK(run("homology --file /nonexistent.owc").code == 2);
    CHECK(run("homology --desc 'disc2(5)' --rel nothing").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify mv --desc 'disc2(5)' --sub boundary").code == 2);
}

TEST_CASE("emitted groups re-parse under the published grammar")
{
    for (std::string desc : {"disc2(12)", "ball3(2,2,4)", "surface(1,2;3)", "surface(2,0;3,3,3)",
                             "disc2(3) x torus(2)", "ball3cyclic(6)", "surface(0,0;2,4,6,8)"}) {
        for (std::string verb : {"homology", "ws-cohomology"}) {
            Run const r = run(verb + " --desc '" + desc + "'");
            REQUIRE(r.code == 0);
            for (auto const& line : lines(r.out)) {
                CAPTURE(line);
                CHECK(parse_group_line(line, verb == "homology" ? '_' : '^'));
            }
        }
    }
    Run const rel = run("ws-cohomology --desc 'disc2(4)' --rel boundary");
    CHECK(rel.out == "H^0 = 0\nH^1 = Z/4\nH^2 = Z\n");
    Run const q = run("homology --desc 'surface(1,0;2)' --coeff q");
    CHECK(q.out == "H_0 = Q\nH_1 = Q^2\nH_2 = Q\n");
}

TEST_CASE("json output")
{
    Run const h = run("homology --desc 'disc2(5)' --json");
    CHECK(h.code == 0);
    CHECK(h.out.find("\"Z/5\"") != std::string::npos);
    Run const v = run("verify duality --desc 'disc2(3)' --json");
    CHECK(v.code == 0);
    CHECK(v.out.find("\"check\": \"duality\"") != std::string::npos);
    CHECK(v.out.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("files, mv, kunneth, affops")
{
    Run const f = run("homology --file '" ORBIHOM_DATA_DIR "/sphere_235.owc'");
    CHECK(f.code == 0);
    CHECK(f.out == "H_0 = Z\nH_1 = 0\nH_2 = Z\n");
    CHECK(run("verify mv --desc 'surface(0,0;2,3,5)' --sub cones --sub complement").code == 0);
    CHECK(run("verify kunneth --desc 'disc2(3)' --torus 2").code == 0);
    Run const a = run("affops selftest --trials 50 --seed 9");
    CHECK(a.code == 0);
    CHECK(a.out == run("affops selftest --trials 50 --seed 9").out);
    CHECK(run("serialize --desc 'disc2(3)'").out.rfind("orbifold disc2(3)\n", 0) == 0);
}
