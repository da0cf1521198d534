#include "orbihom/error.hpp"
#include "orbihom/orbmodel.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace orbihom {

namespace {

std::string trim(std::string const& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(std::string const& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep)
        out.push_back("");
    return out;
}

bool is_id(std::string const& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

[[noreturn]] void line_error(std::size_t line, std::string const& msg)
{
    fail_input("line " + std::to_string(line) + ": " + msg);
}

Integer parse_integer(std::string const& s, std::size_t line, std::string const& what)
{
    Integer v;
    std::string t = s;
    if (!t.empty() && t[0] == '+')
        t = t.substr(1);
    if (t.empty() || v.set_str(t, 10) != 0)
        line_error(line, "malformed " + what + " '" + s + "'");
    return v;
}

// "c_in:3,v0:-1" -> incidences; an empty list or "0" means zero boundary
std::vector<Incidence> parse_boundary(std::string const& text, std::size_t line)
{
    std::vector<Incidence> out;
    std::string const t = trim(text);
    if (t.empty() || t == "0")
        return out;
    for (auto const& entry : split(t, ',')) {
        auto colon = entry.find(':');
        if (colon == std::string::npos)
            line_error(line, "boundary entry '" + entry + "' is not <id>:<int>");
        std::string const id = trim(entry.substr(0, colon));
        if (!is_id(id))
            line_error(line, "malformed cell reference '" + id + "'");
        out.push_back({id, parse_integer(trim(entry.substr(colon + 1)), line, "coefficient")});
    }
    return out;
}

} // namespace

WeightedCellComplex parse_owc(std::string const& text)
{
    std::optional<std::string> name;
    std::optional<int> dim;
    std::vector<Cell> cells;
    std::vector<std::size_t> cell_lines;
    std::map<std::string, std::size_t> cell_index;
    WeightedCellComplex::SubcomplexMap subs;
    std::map<std::string, std::size_t> sub_lines;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::string const line = trim(raw);
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        std::string rest;
        std::getline(ls, rest);
        rest = trim(rest);

        if (keyword == "orbifold") {
            if (name)
                line_error(lineno, "duplicate 'orbifold' line");
            if (rest.empty())
                line_error(lineno, "missing orbifold name");
            name = rest;
        } else if (keyword == "dim") {
            if (dim)
                line_error(lineno, "duplicate 'dim' line");
            Integer d = parse_integer(rest, lineno, "dimension");
            if (d < 0 || d > 64)
                line_error(lineno, "dimension out of range");
            dim = static_cast<int>(d.get_si());
        } else if (keyword == "cell") {
            if (!dim)
                line_error(lineno, "'cell' before 'dim'");
            std::istringstream cs(rest);
            std::string id;
            cs >> id;
            if (!is_id(id))
                line_error(lineno, "malformed cell id '" + id + "'");
            if (cell_index.count(id))
                line_error(lineno, "duplicate cell id '" + id + "'");
            Cell c;
            c.id = id;
            bool have_dim = false;
            std::string fields;
            std::getline(cs, fields);
            fields = trim(fields);
            // key=value pairs; boundary= consumes the rest of the line
            while (!fields.empty()) {
                auto eq = fields.find('=');
                if (eq == std::string::npos)
                    line_error(lineno, "expected key=value, got '" + fields + "'");
                std::string key = trim(fields.substr(0, eq));
                std::string after = trim(fields.substr(eq + 1));
                if (key == "boundary") {
                    c.boundary = parse_boundary(after, lineno);
                    fields.clear();
                    continue;
                }
                std::string value;
                auto sp = after.find_first_of(" \t");
                if (sp == std::string::npos) {
                    value = after;
                    fields.clear();
                } else {
                    value = after.substr(0, sp);
                    fields = trim(after.substr(sp));
                }
                if (key == "dim") {
                    Integer d = parse_integer(value, lineno, "cell dimension");
                    if (d < 0 || d > *dim)
                        line_error(lineno, "cell '" + id + "' has dimension " + d.get_str() + " outside [0, " +
                                               std::to_string(*dim) + "]");
                    c.dim = static_cast<int>(d.get_si());
                    have_dim = true;
                } else if (key == "weight") {
                    c.weight = parse_integer(value, lineno, "weight");
                    if (c.weight < 1)
                        line_error(lineno, "cell '" + id + "' has weight " + c.weight.get_str() + " < 1");
                } else {
                    line_error(lineno, "unknown cell field '" + key + "'");
                }
            }
            if (!have_dim)
                line_error(lineno, "cell '" + id + "' lacks dim=");
            cell_index[id] = cells.size();
            cells.push_back(std::move(c));
            cell_lines.push_back(lineno);
        } else if (keyword == "sub") {
            auto eq = rest.find('=');
            if (eq == std::string::npos)
                line_error(lineno, "expected 'sub <name> = <cells>'");
            std::string sub = trim(rest.substr(0, eq));
            if (!is_id(sub))
                line_error(lineno, "malformed subcomplex name '" + sub + "'");
            if (subs.count(sub))
                line_error(lineno, "duplicate subcomplex '" + sub + "'");
            std::vector<std::string> ids;
            std::string list = trim(rest.substr(eq + 1));
            if (!list.empty()) {
                for (auto const& id : split(list, ',')) {
                    if (!is_id(id))
                        line_error(lineno, "malformed cell reference '" + id + "'");
                    ids.push_back(id);
                }
            }
            subs[sub] = std::move(ids);
            sub_lines[sub] = lineno;
        } else {
            line_error(lineno, "unknown keyword '" + keyword + "'");
        }
    }
    if (!name)
        fail_input("line 1: missing 'orbifold' line");
    if (!dim)
        fail_input("line 1: missing 'dim' line");

    // References and dimensions, reported at the referencing line.
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (Incidence const& inc : cells[i].boundary) {
            auto it = cell_index.find(inc.id);
            if (it == cell_index.end())
                line_error(cell_lines[i], "cell '" + cells[i].id + "' references unknown cell '" + inc.id + "'");
            int const fd = cells[it->second].dim;
            if (fd != cells[i].dim - 1)
                line_error(cell_lines[i], "dimension mismatch: cell '" + cells[i].id + "' of dimension " +
                                              std::to_string(cells[i].dim) + " has boundary cell '" + inc.id +
                                              "' of dimension " + std::to_string(fd));
        }
    for (auto const& [sub, ids] : subs)
        for (auto const& id : ids)
            if (!cell_index.count(id))
                line_error(sub_lines[sub], "subcomplex '" + sub + "' references unknown cell '" + id + "'");

    // dd = 0, checked cell by cell.
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::map<std::string, Integer> dd;
        for (Incidence const& f : cells[i].boundary)
            for (Incidence const& g : cells[cell_index[f.id]].boundary)
                dd[g.id] += f.coeff * g.coeff;
        for (auto const& [face, v] : dd)
            if (v != 0)
                line_error(cell_lines[i], "boundary of boundary of '" + cells[i].id + "' is nonzero (coefficient " +
                                              v.get_str() + " on '" + face + "')");
    }

    return WeightedCellComplex::build(*name, *dim, std::move(cells), std::move(subs));
}

std::string serialize_owc(WeightedCellComplex const& x)
{
    std::ostringstream out;
    out << "orbifold " << x.name() << "\n";
    out << "dim " << x.dim() << "\n";
    for (Cell const& c : x.cells()) {
        out << "cell " << c.id << " dim=" << c.dim << " weight=" << c.weight.get_str();
        for (std::size_t i = 0; i < c.boundary.size(); ++i)
            out << (i == 0 ? " boundary=" : ",") << c.boundary[i].id << ":" << c.boundary[i].coeff.get_str();
        out << "\n";
    }
    for (auto const& [sub, ids] : x.subcomplexes()) {
        out << "sub " << sub << " =";
        for (std::size_t i = 0; i < ids.size(); ++i)
            out << (i == 0 ? " " : ",") << ids[i];
        out << "\n";
    }
    return out.str();
}

} // namespace orbihom
