#include "quasr/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace quasr {

namespace {
[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Parses exactly two non-negative integers from a line, nothing else.
bool two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream in(line);
    if (!(in >> a >> b)) return false;
    std::string rest;
    if (in >> rest) return false;
    return true;
}
}  // namespace

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);

    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) fail(1, "missing header line \"n m\"");
    ++lineno;
    long long n, m;
    if (!two_ints(line, n, m) || n < 0 || m < 0) fail(lineno, "malformed header, expected \"n m\"");

    Graph g(int(n));
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() && seen == m) break;  // tolerate one trailing blank line
        long long u, v;
        if (!two_ints(line, u, v)) fail(lineno, "malformed edge line, expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(lineno, "vertex index out of range [0, " + std::to_string(n) + ")");
        if (u == v) fail(lineno, "self-loop " + std::to_string(u) + " " + std::to_string(v));
        if (u > v) fail(lineno, "expected u < v");
        if (g.has_edge(int(u), int(v)))
            fail(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(int(u), int(v));
        ++seen;
        if (seen > m) fail(lineno, "more edges than the declared count");
    }
    if (seen != m)
        throw ParseError("edge count mismatch: header declared " + std::to_string(m) +
                         ", file contains " + std::to_string(seen));
    return g;
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    const int n = g.vertex_count();
    for (int u = 0; u + 1 < n; ++u) {
        g.neighbors(u).for_each([&](int v) {
            if (v > u) out << u << " " << v << "\n";
        });
    }
}

BlockLayout load_blocks(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.contains("blocks") || !j["blocks"].is_array())
        throw ParseError(path + ": expected {\"blocks\": [[...], ...]}");
    BlockLayout layout;
    for (const auto& b : j["blocks"]) {
        std::vector<int> blk;
        for (const auto& v : b) blk.push_back(v.get<int>());
        layout.blocks.push_back(std::move(blk));
    }
    return layout;
}

void save_blocks(const BlockLayout& layout, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    nlohmann::json j;
    j["blocks"] = layout.blocks;
    out << j.dump() << "\n";
}

}  // namespace quasr
