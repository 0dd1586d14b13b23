#pragma once

#include <cstdint>
#include <vector>

#include "quasr/bitset.hpp"

namespace quasr {

// Undirected simple graph with per-vertex bitset adjacency.
// Invariants: adjacency is symmetric and irreflexive. Intended use is
// build-then-freeze: generators and loaders add all edges, after which the
// graph is shared read-only.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    VertexSet full_set() const { return Bitset::full(n_); }

    // e(S): unordered edges inside S.
    std::int64_t edges_within(const VertexSet& s) const;

    // e(S,T) = sum over s in S, t in T of the edge indicator (ordered pairs).
    // For disjoint S, T this is the plain cross edge count; for S = T it is
    // twice the internal edge count.
    std::int64_t edges_between(const VertexSet& s, const VertexSet& t) const;

    double density() const;
    // d(A,B) = e(A,B) / (|A||B|), ordered-pair convention.
    double pair_density(const VertexSet& a, const VertexSet& b) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<Bitset> adj_;
};

// Vertices of s relabeled to [0, |s|) preserving order; adjacency restricted.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace quasr
