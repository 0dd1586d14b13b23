#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace quasr {

// Small pattern graph H (at most 10 vertices). 2^r and r! enumerations over
// pattern vertices are treated as free.
class Pattern {
public:
    static constexpr int kMaxVertices = 10;

    Pattern(int r, std::vector<std::pair<int, int>> edges);

    // Built-in library: K2..K5, C4, C6, C8, K33, P3, P4 (P3 = path on 3 vertices).
    static Pattern named(const std::string& name);
    static std::optional<Pattern> try_named(const std::string& name);

    int vertex_count() const { return r_; }
    int edge_count() const { return int(edges_.size()); }
    std::span<const std::pair<int, int>> edges() const { return edges_; }
    const std::string& name() const { return name_; }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint32_t adj_mask(int v) const { return adj_[v]; }
    int degree(int v) const;

    bool has_isolated_vertex() const;

    // Shortest cycle length by brute force; nullopt for forests.
    std::optional<int> girth() const;

    // Brute force over all r! vertex permutations.
    std::int64_t automorphism_count() const;

    // Vertex order for counting DFS: descending degree, ties broken toward
    // vertices adjacent to the already-ordered prefix, then by index.
    std::vector<int> counting_order() const;

private:
    int r_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint32_t> adj_;
    std::string name_;
};

}  // namespace quasr
