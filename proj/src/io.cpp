#include "wdms/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wdms {

namespace {

struct Cursor {
    std::string line;
    int lineno = 0;
    size_t pos = 0;

    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= line.size() || line[pos] == '#';
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < line.size() && !isspace(static_cast<unsigned char>(line[pos])) &&
               line[pos] != '#')
            ++pos;
        if (start == pos) throw ParseError(lineno, static_cast<int>(start + 1), "expected token");
        return line.substr(start, pos - start);
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(lineno, static_cast<int>(pos + 1), msg);
    }
};

int parse_int(Cursor& c, const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) c.fail("bad integer '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        c.fail("bad integer '" + s + "'");
    }
}

// key=value token
std::pair<std::string, std::string> split_kv(Cursor& c, const std::string& tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) c.fail("expected key=value, got '" + tok + "'");
    return {tok.substr(0, eq), tok.substr(eq + 1)};
}

Side parse_side(Cursor& c, const std::string& tok, std::map<std::string, int>& arc_seen) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) c.fail("side must be arc:<name> or bseg:<b>.<k>");
    std::string kind = tok.substr(0, colon);
    std::string rest = tok.substr(colon + 1);
    if (kind == "arc") {
        if (rest.empty()) c.fail("empty arc name");
        int occ = arc_seen[rest]++;
        return Side{ArcSide{rest, occ}};
    }
    if (kind == "bseg") {
        auto dot = rest.rfind('.');
        if (dot == std::string::npos) c.fail("bseg needs <boundary>.<segment>");
        std::string b = rest.substr(0, dot);
        int k = parse_int(c, rest.substr(dot + 1));
        return Side{BoundarySegmentSide{b, k}};
    }
    c.fail("unknown side kind '" + kind + "'");
}

} // namespace

WdmsDocument parse_wdms(const std::string& text) {
    WdmsDocument doc;
    MixedAngulation& a = doc.angulation;
    bool saw_surface = false;
    std::map<std::string, int> arc_seen;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        Cursor c{raw, lineno, 0};
        if (c.done()) continue;
        std::string head = c.word();
        if (head == "surface") {
            auto [k, v] = split_kv(c, c.word());
            if (k != "genus") c.fail("expected genus=<g>");
            a.spec.genus = parse_int(c, v);
            saw_surface = true;
        } else if (head == "boundary") {
            std::string name = c.word();
            auto [k, v] = split_kv(c, c.word());
            if (k != "marked") c.fail("expected marked=<k>");
            a.spec.boundaries.push_back({name, parse_int(c, v)});
        } else if (head == "decoration") {
            std::string name = c.word();
            auto [k, v] = split_kv(c, c.word());
            if (k != "weight") c.fail("expected weight=<w>");
            a.spec.decorations.push_back({name, parse_int(c, v)});
        } else if (head == "polygon") {
            Polygon p;
            p.decoration = c.word();
            std::string colon = c.word();
            if (colon != ":") c.fail("expected ':' after polygon decoration");
            while (!c.done()) p.sides.push_back(parse_side(c, c.word(), arc_seen));
            if (p.sides.empty()) c.fail("polygon without sides");
            a.polygons.push_back(p);
        } else if (head == "shift") {
            auto [k, v] = split_kv(c, c.word());
            a.arc_shift[k] = parse_int(c, v);
        } else if (head == "select") {
            while (!c.done()) doc.selection.push_back(c.word());
        } else {
            c.fail("unknown directive '" + head + "'");
        }
        if (!c.done()) c.fail("trailing tokens");
    }
    if (!saw_surface) throw ParseError(lineno, 1, "missing 'surface' line");
    return doc;
}

std::string serialize_wdms(const WdmsDocument& doc) {
    const MixedAngulation& a = doc.angulation;
    std::ostringstream out;
    out << "surface genus=" << a.spec.genus << "\n";
    for (const auto& b : a.spec.boundaries)
        out << "boundary " << b.name << " marked=" << b.marked << "\n";
    for (const auto& d : a.spec.decorations)
        out << "decoration " << d.name << " weight=" << d.weight << "\n";
    for (const auto& p : a.polygons) {
        int n = static_cast<int>(p.sides.size());
        int best = 0;
        for (int r = 1; r < n; ++r) {
            for (int i = 0; i < n; ++i) {
                std::string lhs = side_token(p.sides[(r + i) % n]);
                std::string rhs = side_token(p.sides[(best + i) % n]);
                if (lhs != rhs) {
                    if (lhs < rhs) best = r;
                    break;
                }
            }
        }
        out << "polygon " << p.decoration << " :";
        for (int i = 0; i < n; ++i) out << " " << side_token(p.sides[(best + i) % n]);
        out << "\n";
    }
    for (const auto& [arc, s] : a.arc_shift)
        if (s != 0) out << "shift " << arc << "=" << s << "\n";
    if (!doc.selection.empty()) {
        out << "select";
        for (const auto& d : doc.selection) out << " " << d;
        out << "\n";
    }
    return out.str();
}

WdmsDocument load_wdms_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_wdms(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

} // namespace wdms
