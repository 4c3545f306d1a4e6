#include "bredon/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bredon/error.hpp"

namespace bredon {

namespace {

std::string trim(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Non-empty lines with comments removed, paired with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text)
{
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (!line.empty())
            out.emplace_back(no, line);
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg)
{
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

long long parse_integer(const std::string& s, std::size_t line)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size())
            fail(line, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(line, "bad integer '" + s + "'");
    }
}

/// Cursor over one line for the term grammars.
struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    std::size_t line = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done()
    {
        skip();
        return pos >= s.size();
    }
    char peek()
    {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c)
    {
        if (peek() != c)
            fail(line, std::string("expected '") + c + "' at column " + std::to_string(pos + 1));
        ++pos;
    }
    long long integer()
    {
        skip();
        std::size_t b = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        return parse_integer(s.substr(b, pos - b), line);
    }
    std::string word()
    {
        skip();
        std::size_t b = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '+' &&
               !(s[pos] == '-' && pos > b))
            ++pos;
        if (b == pos)
            fail(line, "expected a name at column " + std::to_string(pos + 1));
        return s.substr(b, pos - b);
    }
    std::string cycles()
    {
        skip();
        std::size_t b = pos;
        if (peek() != '(')
            fail(line, "expected a permutation at column " + std::to_string(pos + 1));
        while (peek() == '(') {
            std::size_t close = s.find(')', pos);
            if (close == std::string::npos)
                fail(line, "unterminated cycle");
            pos = close + 1;
        }
        return s.substr(b, pos - b);
    }
    /// Sign between terms: '+' or '-' (or nothing before the first term).
    long long separator(bool first)
    {
        char c = peek();
        if (c == '+' || (c == '-' && !first)) {
            ++pos;
            return c == '-' ? -1 : 1;
        }
        if (!first)
            fail(line, "expected '+' or '-' between terms");
        return 1;
    }
};

int element_of(const GroupPtr& g, const std::string& cycles, std::size_t line)
{
    Permutation p = Permutation::parse_cycles(cycles, g->degree());
    auto idx = g->index_of(p);
    if (!idx)
        fail(line, "permutation " + cycles + " is not in the group");
    return *idx;
}

std::string signed_terms(const std::vector<std::pair<long long, std::string>>& terms)
{
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        long long c = terms[i].first;
        if (i == 0)
            out += std::to_string(c);
        else
            out += (c < 0 ? " - " : " + ") + std::to_string(c < 0 ? -c : c);
        out += "*" + terms[i].second;
    }
    return out;
}

} // namespace

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text;
}

GroupPtr parse_group(const std::string& text, const std::string& default_name)
{
    auto lines = content_lines(text);
    std::string name = default_name;
    int degree = 0;
    std::vector<std::string> gens;
    std::vector<std::vector<int>> table;
    std::size_t cayley = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = trim(line.substr(key.size()));
        if (key == "name") {
            name = rest;
        } else if (key == "degree") {
            degree = static_cast<int>(parse_integer(rest, no));
            if (degree < 1)
                fail(no, "degree must be positive");
        } else if (key == "gen") {
            gens.push_back(rest);
        } else if (key == "cayley") {
            cayley = static_cast<std::size_t>(parse_integer(rest, no));
            for (std::size_t r = 0; r < cayley; ++r) {
                if (++i >= lines.size())
                    fail(no, "Cayley table is missing rows");
                std::istringstream row(lines[i].second);
                std::vector<int> entries;
                std::string tok;
                while (row >> tok)
                    entries.push_back(static_cast<int>(parse_integer(tok, lines[i].first)));
                table.push_back(std::move(entries));
            }
        } else {
            fail(no, "unknown keyword '" + key + "'");
        }
    }
    if (cayley > 0) {
        if (!gens.empty())
            throw Error(ErrorKind::Parse, "a group file gives either generators or a Cayley table");
        return FiniteGroup::from_cayley_table(table, name);
    }
    if (degree == 0)
        throw Error(ErrorKind::Parse, "group file needs `degree N`");
    std::vector<Permutation> perms;
    for (const auto& gtext : gens)
        perms.push_back(Permutation::parse_cycles(gtext, degree));
    return FiniteGroup::from_generators(degree, std::move(perms), name);
}

GroupPtr load_group(const std::string& path)
{
    return parse_group(read_text_file(path), std::filesystem::path(path).stem().string());
}

std::string format_group(const FiniteGroup& g)
{
    std::ostringstream os;
    if (!g.name().empty())
        os << "name " << g.name() << '\n';
    os << "degree " << g.degree() << '\n';
    for (const auto& p : g.generators())
        if (!p.is_identity())
            os << "gen " << p.to_cycles() << '\n';
    return os.str();
}

Subgroup parse_subgroup(const std::string& text, const GroupPtr& g)
{
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        throw Error(ErrorKind::Parse, "subgroup must be written {gen; gen; ...}: " + text);
    std::string body = t.substr(1, t.size() - 2);
    std::vector<int> gens;
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, ';')) {
        part = trim(part);
        if (part.empty())
            continue;
        gens.push_back(element_of(g, part, 0));
    }
    return Subgroup::generate(g, gens);
}

std::vector<Subgroup> parse_subgroup_list(const std::string& text, const GroupPtr& g)
{
    std::vector<Subgroup> out;
    for (const auto& [no, line] : content_lines(text)) {
        try {
            out.push_back(parse_subgroup(line, g));
        } catch (const Error& e) {
            fail(no, e.what());
        }
    }
    return out;
}

BredonModule parse_module(const std::string& text, const CategoryPtr& cat)
{
    Variance v = Variance::Right;
    std::vector<long long> ranks(cat->object_count(), -1);
    std::map<std::size_t, std::pair<std::size_t, std::string>> actions;
    for (const auto& [no, line] : content_lines(text)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "variance") {
            std::string w;
            ls >> w;
            if (w == "right")
                v = Variance::Right;
            else if (w == "left")
                v = Variance::Left;
            else
                fail(no, "variance must be right or left");
        } else if (key == "object") {
            std::string obj, rank_kw, rank;
            ls >> obj >> rank_kw >> rank;
            if (obj.rfind("H_", 0) == 0)
                obj = obj.substr(2);
            auto o = parse_integer(obj, no);
            if (o < 0 || static_cast<std::size_t>(o) >= ranks.size())
                fail(no, "object index out of range");
            if (rank_kw != "rank")
                fail(no, "expected `object <i> rank <r>`");
            ranks[static_cast<std::size_t>(o)] = parse_integer(rank, no);
            if (ranks[static_cast<std::size_t>(o)] < 0)
                fail(no, "negative rank");
        } else if (key == "action") {
            std::string id, kw;
            ls >> id >> kw;
            if (kw != "matrix")
                fail(no, "expected `action <id> matrix [[...]]`");
            auto m = parse_integer(id, no);
            if (m < 0 || static_cast<std::size_t>(m) >= cat->morphism_count())
                fail(no, "morphism id out of range");
            std::string rest;
            std::getline(ls, rest);
            actions[static_cast<std::size_t>(m)] = {no, trim(rest)};
        } else {
            fail(no, "unknown keyword '" + key + "'");
        }
    }
    std::vector<std::size_t> r;
    for (std::size_t o = 0; o < ranks.size(); ++o) {
        if (ranks[o] < 0)
            throw Error(ErrorKind::Parse, "module file gives no rank for object " + std::to_string(o));
        r.push_back(static_cast<std::size_t>(ranks[o]));
    }
    std::vector<IntMatrix> mats;
    for (const auto& f : cat->morphisms()) {
        std::size_t rows = v == Variance::Right ? r[f.source] : r[f.target];
        std::size_t cols = v == Variance::Right ? r[f.target] : r[f.source];
        auto it = actions.find(f.id);
        if (it == actions.end()) {
            if (f.source == f.target && f.id == cat->identity(f.source).id) {
                mats.push_back(IntMatrix::identity(rows));
                continue;
            }
            throw Error(ErrorKind::Parse, "module file gives no action for morphism " + std::to_string(f.id));
        }
        const auto& [no, body] = it->second;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception&) {
            fail(no, "bad matrix " + body);
        }
        if (!j.is_array())
            fail(no, "matrix must be a list of rows");
        IntMatrix m(rows, cols);
        if (j.size() != rows && !(rows == 0 && j.empty()))
            fail(no, "matrix needs " + std::to_string(rows) + " rows");
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_array() || j[i].size() != cols)
                fail(no, "row " + std::to_string(i) + " needs " + std::to_string(cols) + " entries");
            for (std::size_t c = 0; c < cols; ++c) {
                if (!j[i][c].is_number_integer())
                    fail(no, "matrix entries must be integers");
                m(i, c) = j[i][c].get<long long>();
            }
        }
        mats.push_back(std::move(m));
    }
    BredonModule out = BredonModule::from_table(cat, v, std::move(r), std::move(mats));
    if (!out.is_functorial())
        throw Error(ErrorKind::CompositionMismatch, "module actions do not compose functorially");
    return out;
}

std::string format_module(const BredonModule& m)
{
    const OrbitCategory& cat = m.category();
    std::ostringstream os;
    os << "variance " << to_string(m.variance()) << '\n';
    for (std::size_t o = 0; o < cat.object_count(); ++o)
        os << "object " << o << " rank " << m.rank(o) << "  # " << cat.subgroup(o).describe() << '\n';
    for (const auto& f : cat.morphisms()) {
        if (f.id == cat.identity(f.source).id)
            continue;
        const IntMatrix& a = m.act(f);
        os << "action " << f.id << " matrix [";
        for (std::size_t i = 0; i < a.rows(); ++i) {
            os << (i ? "," : "") << '[';
            for (std::size_t c = 0; c < a.cols(); ++c)
                os << (c ? "," : "") << a(i, c);
            os << ']';
        }
        os << "]  # " << f.source << " -> " << f.target << " by " << cat.group()->element(f.rep).to_cycles() << '\n';
    }
    return os.str();
}

EquivariantCWData parse_equivariant_cw(const std::string& text, const GroupPtr& g)
{
    EquivariantCWData x;
    x.group = g;
    std::vector<std::map<std::string, std::size_t>> ids;
    for (const auto& [no, line] : content_lines(text)) {
        if (line.front() == '[') {
            std::istringstream ls(line.substr(1));
            std::string kw;
            long long n = -1;
            ls >> kw >> n;
            if (kw != "dim" || n != static_cast<long long>(x.cells.size()))
                fail(no, "expected [dim " + std::to_string(x.cells.size()) + "]");
            x.cells.emplace_back();
            ids.emplace_back();
            continue;
        }
        if (x.cells.empty())
            fail(no, "cell before the first [dim N] section");
        const std::size_t n = x.cells.size() - 1;
        Cursor c{line, 0, no};
        if (c.word() != "cell")
            fail(no, "expected `cell <id> stab {...} boundary ...`");
        OrbitCell cell;
        cell.id = c.word();
        if (ids[n].count(cell.id))
            fail(no, "duplicate cell id " + cell.id);
        if (c.word() != "stab")
            fail(no, "expected `stab`");
        c.skip();
        std::size_t close = line.find('}', c.pos);
        if (c.peek() != '{' || close == std::string::npos)
            fail(no, "expected {generators}");
        try {
            cell.stabilizer = parse_subgroup(line.substr(c.pos, close - c.pos + 1), g);
        } catch (const Error& e) {
            fail(no, e.what());
        }
        c.pos = close + 1;
        if (!c.done()) {
            if (c.word() != "boundary")
                fail(no, "expected `boundary`");
            bool first = true;
            while (!c.done()) {
                long long sign = c.separator(first);
                first = false;
                long long coeff = c.integer();
                c.expect('*');
                int elem = element_of(g, c.cycles(), no);
                c.expect('*');
                std::string target = c.word();
                if (n == 0)
                    fail(no, "0-cells have no boundary");
                auto it = ids[n - 1].find(target);
                if (it == ids[n - 1].end())
                    fail(no, "unknown cell " + target + " in dimension " + std::to_string(n - 1));
                cell.boundary.push_back({sign * coeff, elem, it->second});
            }
        }
        ids[n][cell.id] = x.cells[n].size();
        x.cells[n].push_back(std::move(cell));
    }
    x.validate();
    return x;
}

std::string format_equivariant_cw(const EquivariantCWData& x)
{
    std::ostringstream os;
    for (std::size_t n = 0; n < x.cells.size(); ++n) {
        os << "[dim " << n << "]\n";
        for (const auto& cell : x.cells[n]) {
            os << "cell " << cell.id << " stab " << cell.stabilizer.describe();
            if (!cell.boundary.empty()) {
                std::vector<std::pair<long long, std::string>> terms;
                for (const auto& t : cell.boundary)
                    terms.emplace_back(t.coeff, x.group->element(t.g).to_cycles() + "*" + x.cells[n - 1][t.cell].id);
                os << " boundary " << signed_terms(terms);
            }
            os << '\n';
        }
    }
    return os.str();
}

QuotientCWData parse_quotient_cw(const std::string& text)
{
    std::vector<std::size_t> ranks;
    std::vector<std::map<std::size_t, std::vector<std::pair<std::size_t, long long>>>> cols;
    for (const auto& [no, line] : content_lines(text)) {
        if (line.front() == '[') {
            std::size_t close = line.find(']');
            if (close == std::string::npos)
                fail(no, "unterminated section header");
            std::istringstream hs(line.substr(1, close - 1));
            std::string kw;
            long long n = -1;
            hs >> kw >> n;
            if (kw != "dim" || n != static_cast<long long>(ranks.size()))
                fail(no, "expected [dim " + std::to_string(ranks.size()) + "]");
            std::istringstream rs(line.substr(close + 1));
            std::string cells_kw, count;
            rs >> cells_kw >> count;
            if (cells_kw != "cells")
                fail(no, "expected `cells <count>` after the section header");
            long long r = parse_integer(count, no);
            if (r < 0)
                fail(no, "negative cell count");
            ranks.push_back(static_cast<std::size_t>(r));
            cols.emplace_back();
            continue;
        }
        if (ranks.empty())
            fail(no, "boundary before the first [dim N] section");
        const std::size_t n = ranks.size() - 1;
        if (n == 0)
            fail(no, "0-cells have no boundary");
        Cursor c{line, 0, no};
        if (c.word() != "d")
            fail(no, "expected `d <cell> = ...`");
        long long cell = c.integer();
        if (cell < 0 || static_cast<std::size_t>(cell) >= ranks[n])
            fail(no, "cell index out of range");
        c.expect('=');
        auto& entries = cols[n][static_cast<std::size_t>(cell)];
        if (c.peek() == '0' && trim(line.substr(c.pos)) == "0")
            continue;
        bool first = true;
        while (!c.done()) {
            long long sign = c.separator(first);
            first = false;
            long long coeff = c.integer();
            c.expect('*');
            long long target = c.integer();
            if (target < 0 || static_cast<std::size_t>(target) >= ranks[n - 1])
                fail(no, "boundary cell index out of range");
            entries.emplace_back(static_cast<std::size_t>(target), sign * coeff);
        }
    }
    if (ranks.empty())
        throw Error(ErrorKind::Parse, "quotient CW file has no sections");
    QuotientCWData q(ranks);
    for (std::size_t n = 1; n < ranks.size(); ++n) {
        SparseMatrix d(ranks[n - 1], ranks[n]);
        for (const auto& [cell, entries] : cols[n]) {
            SparseMatrix::Column col;
            for (const auto& [r, v] : entries)
                col.push_back({r, Integer(v)});
            d.set_column(cell, std::move(col));
        }
        q.set_boundary(n, std::move(d));
    }
    if (!q.squares_to_zero())
        throw Error(ErrorKind::BoundaryMismatch, "quotient CW boundaries do not square to zero");
    return q;
}

std::string format_quotient_cw(const QuotientCWData& q)
{
    std::ostringstream os;
    for (std::size_t n = 0; n <= q.top(); ++n) {
        os << "[dim " << n << "] cells " << q.rank(n) << '\n';
        if (n == 0)
            continue;
        const SparseMatrix& d = q.boundary(n);
        for (std::size_t c = 0; c < d.cols(); ++c) {
            if (d.column(c).empty())
                continue;
            std::vector<std::pair<long long, std::string>> terms;
            for (const auto& e : d.column(c))
                terms.emplace_back(static_cast<long long>(e.value), std::to_string(e.row));
            os << "d " << c << " = " << signed_terms(terms) << '\n';
        }
    }
    return os.str();
}

} // namespace bredon
