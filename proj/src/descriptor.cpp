#include "orbihom/descriptor.hpp"

#include "orbihom/error.hpp"

#include <cctype>
#include <climits>

namespace orbihom {

namespace {

class Parser
{
public:
    explicit Parser(std::string_view s) : s_(s) {}

    OrbifoldDesc parse()
    {
        OrbifoldDesc d = base();
        skip();
        while (pos_ < s_.size()) {
            expect_word("x");
            skip();
            std::size_t const at = pos_;
            if (word() != "torus")
                fail(at, "expected 'torus'");
            expect('(');
            long k = number();
            expect(')');
            if (k > INT_MAX)
                fail(at, "torus factor count too large");
            d = OrbifoldDesc::product_torus(std::move(d), static_cast<int>(k));
            skip();
        }
        return d;
    }

private:
    [[noreturn]] void fail(std::size_t at, std::string const& msg) const
    {
        fail_input("descriptor column " + std::to_string(at + 1) + ": " + msg + " in \"" + std::string(s_) +
                   "\"");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    std::string word()
    {
        skip();
        std::size_t const b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(b, pos_ - b));
    }

    void expect_word(char const* w)
    {
        std::size_t const at = pos_;
        if (word() != w)
            fail(at, std::string("expected '") + w + "'");
    }

    void expect(char c)
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long number()
    {
        skip();
        std::size_t const b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (b == pos_)
            fail(b, "expected a non-negative integer");
        if (pos_ - b > 9)
            fail(b, "integer too large");
        return std::stol(std::string(s_.substr(b, pos_ - b)));
    }

    OrbifoldDesc base()
    {
        skip();
        std::size_t const at = pos_;
        std::string const name = word();
        if (name == "disc2" || name == "ball3cyclic") {
            expect('(');
            long n = number();
            expect(')');
            return name == "disc2" ? OrbifoldDesc::disc2(n) : OrbifoldDesc::ball3_cyclic(n);
        }
        if (name == "ball3") {
            expect('(');
            long a = number();
            expect(',');
            long b = number();
            expect(',');
            long c = number();
            expect(')');
            return OrbifoldDesc::ball3(a, b, c);
        }
        if (name == "surface") {
            expect('(');
            long g = number();
            expect(',');
            long b = number();
            std::vector<long> cones;
            if (accept(';')) {
                cones.push_back(number());
                while (accept(','))
                    cones.push_back(number());
            }
            expect(')');
            return OrbifoldDesc::surface(g, b, std::move(cones));
        }
        if (name.empty())
            fail(at, "expected an orbifold family");
        fail(at, "unknown orbifold family '" + name + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

OrbifoldDesc parse_descriptor(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace orbihom
