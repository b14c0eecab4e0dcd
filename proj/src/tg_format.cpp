#include "tcg/tg_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tcg {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_time(const std::string& tok, int lineno) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(lineno) + ": bad timestep '" + tok + "'");
    if (value < 1)
        throw ParseError("line " + std::to_string(lineno) + ": non-positive timestep");
    return value;
}

}  // namespace

TemporalGraph parse_tg(std::string_view text) {
    TemporalGraph g;
    bool seen_header = false;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                              : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;

        if (!seen_header) {
            if (tok.size() != 2 || tok[0] != "tgraph" || tok[1] != "1")
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header 'tgraph 1'");
            seen_header = true;
            continue;
        }
        if (tok[0] == "vertex") {
            if (tok.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": vertex needs one label");
            g.intern(tok[1]);
        } else if (tok[0] == "edge") {
            if (tok.size() < 4)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": edge needs two labels and at least one timestep");
            if (tok[1] == tok[2])
                throw ParseError("line " + std::to_string(lineno) + ": self-loop forbidden");
            for (std::size_t i = 3; i < tok.size(); ++i)
                g.add_appearance(tok[1], tok[2], parse_time(tok[i], lineno));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" +
                             tok[0] + "'");
        }
    }
    if (!seen_header) throw ParseError("missing header 'tgraph 1'");
    return g;
}

std::string serialise_tg(const TemporalGraph& g) {
    std::ostringstream out;
    out << "tgraph 1\n";

    std::set<std::string> isolated;
    for (VertexId v = 0; v < g.vertex_count(); ++v) isolated.insert(g.label(v));
    std::map<std::pair<std::string, std::string>, const std::vector<int>*> edges;
    for (const auto& [e, ts] : g.appearances()) {
        std::string lu = g.label(e.u), lv = g.label(e.v);
        isolated.erase(lu);
        isolated.erase(lv);
        if (lv < lu) std::swap(lu, lv);
        edges[{lu, lv}] = &ts;
    }
    for (const std::string& l : isolated) out << "vertex " << l << "\n";
    for (const auto& [pair, ts] : edges) {
        out << "edge " << pair.first << " " << pair.second;
        for (int t : *ts) out << " " << t;
        out << "\n";
    }
    return out.str();
}

TemporalGraph load_tg_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tg(buf.str());
}

}  // namespace tcg
