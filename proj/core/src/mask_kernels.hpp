#pragma once

// Internal word-sized counting kernels for the exact-enumeration paths
// (n <= 24, so one machine word holds a vertex subset).

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "quasr/graph.hpp"
#include "quasr/pattern.hpp"

namespace quasr::detail {

using mask_t = std::uint32_t;

inline std::vector<mask_t> adjacency_masks(const Graph& g) {
    std::vector<mask_t> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        adj[v] = mask_t(g.neighbors(v).word(0));
    return adj;
}

// Pattern vertices in counting order plus, per position, the positions of
// already-mapped neighbors.
struct PatternPlan {
    int r = 0;
    std::array<std::uint8_t, Pattern::kMaxVertices> vertex{};         // order[pos]
    std::array<std::uint16_t, Pattern::kMaxVertices> earlier{};       // bitmask of positions
    std::array<std::uint8_t, Pattern::kMaxVertices> pos_of_vertex{};  // inverse of vertex

    explicit PatternPlan(const Pattern& h) : r(h.vertex_count()) {
        auto order = h.counting_order();
        for (int pos = 0; pos < r; ++pos) {
            vertex[pos] = std::uint8_t(order[pos]);
            pos_of_vertex[order[pos]] = std::uint8_t(pos);
        }
        for (int pos = 0; pos < r; ++pos) {
            std::uint16_t e = 0;
            for (int j = 0; j < pos; ++j)
                if (h.has_edge(order[pos], order[j])) e |= std::uint16_t(1) << j;
            earlier[pos] = e;
        }
    }
};

// Injective edge-preserving maps of h into the vertices of `mask`.
inline std::int64_t labeled_copies_mask(const PatternPlan& plan, const std::vector<mask_t>& adj,
                                        mask_t mask) {
    std::array<int, Pattern::kMaxVertices> phi;
    std::int64_t total = 0;
    mask_t used = 0;

    auto rec = [&](auto&& self, int pos) -> void {
        mask_t cand = mask & ~used;
        for (std::uint16_t e = plan.earlier[pos]; e; e &= e - 1)
            cand &= adj[phi[std::countr_zero(e)]];
        if (pos == plan.r - 1) {
            total += std::popcount(cand);
            return;
        }
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            phi[pos] = v;
            used |= mask_t(1) << v;
            self(self, pos + 1);
            used &= ~(mask_t(1) << v);
        }
    };
    rec(rec, 0);
    return total;
}

// Edge-preserving maps with per-pattern-vertex target masks. No injectivity
// constraint; for pairwise-disjoint targets injectivity is automatic.
inline std::int64_t hom_targets_mask(const PatternPlan& plan, const std::vector<mask_t>& adj,
                                     const std::array<mask_t, Pattern::kMaxVertices>& target) {
    std::array<int, Pattern::kMaxVertices> phi;
    std::int64_t total = 0;

    auto rec = [&](auto&& self, int pos) -> void {
        mask_t cand = target[plan.vertex[pos]];
        for (std::uint16_t e = plan.earlier[pos]; e; e &= e - 1)
            cand &= adj[phi[std::countr_zero(e)]];
        if (pos == plan.r - 1) {
            total += std::popcount(cand);
            return;
        }
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            phi[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return total;
}

// Unordered edges inside mask.
inline std::int64_t edges_mask(const std::vector<mask_t>& adj, mask_t mask) {
    std::int64_t twice = 0;
    for (mask_t m = mask; m; m &= m - 1)
        twice += std::popcount(adj[std::countr_zero(m)] & mask);
    return twice / 2;
}

// Unlabeled k-cliques inside cand (ascending-order enumeration).
inline std::int64_t cliques_mask(const std::vector<mask_t>& adj, mask_t cand, int k) {
    if (k == 0) return 1;
    if (k == 1) return std::popcount(cand);
    if (k == 2) return edges_mask(adj, cand);
    std::int64_t total = 0;
    while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        total += cliques_mask(adj, cand & adj[v], k - 1);
    }
    return total;
}

}  // namespace quasr::detail
