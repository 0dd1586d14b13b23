#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quasr/checked_int.hpp"
#include "quasr/graph.hpp"
#include "quasr/pattern.hpp"

namespace quasr {

// Labeled copy = injective edge-preserving map from the pattern into the
// host (non-edges of H may land anywhere). Homomorphism = edge-preserving
// map, not necessarily injective. All counts are exact; overflow beyond
// 2^63 - 1 throws std::overflow_error instead of wrapping.

// Maps V(H) -> V(G) preserving edges. If targets is given it must hold one
// vertex set per pattern vertex; vertex i lands inside targets[i].
std::int64_t count_homomorphisms(const Pattern& h, const Graph& g,
                                 const std::vector<VertexSet>* targets = nullptr);

std::int64_t count_labeled_copies(const Pattern& h, const Graph& g, const VertexSet& s);
std::int64_t count_labeled_copies(const Pattern& h, const Graph& g);

// Labeled copies of h inside s u {v} that use v (v need not lie in s).
// This is the toggle delta of the subset walk and of hill climbing.
std::int64_t count_labeled_copies_through(const Pattern& h, const Graph& g, const VertexSet& s,
                                          int v);

// Labeled copies with exactly one vertex in each part (parts pairwise
// disjoint, one part per pattern vertex, all assignments).
std::int64_t count_partite_averaged(const Pattern& h, const Graph& g,
                                    std::span<const VertexSet> parts);

// Copies where the image of pattern vertex v lies in parts[pi[v]]; pi must be
// a bijection onto [0, r).
std::int64_t count_partite_ordered(const Pattern& h, const Graph& g,
                                   std::span<const VertexSet> parts, std::span<const int> pi);

// Evaluates the alternating sum over N_H(U_S) for S a nonempty subset of the
// parts. Equals count_partite_averaged exactly.
std::int64_t count_partite_inclusion_exclusion(const Pattern& h, const Graph& g,
                                               std::span<const VertexSet> parts);

// Unlabeled r-cliques inside s.
std::int64_t count_cliques(const Graph& g, const VertexSet& s, int r);

// Labeled r-cliques with exactly i vertices in X and r-i in Y (X, Y disjoint).
struct ClassCountVector {
    int r = 0;
    std::vector<std::int64_t> counts;  // index i = exactly i vertices in X

    std::int64_t total() const;
};
ClassCountVector count_cross_cliques(const Graph& g, const VertexSet& x, const VertexSet& y,
                                     int r);

// Per-vertex r-clique counts inside U and their deviation from the
// p-random expectation p^C(r,2) |U|^(r-1) / (r-1)!.
struct DiscrepancyProfile {
    std::vector<int> vertices;               // members of U in index order
    std::vector<std::int64_t> clique_count;  // c_U(u), aligned with vertices
    std::vector<double> disc;                // disc_U(u)
    double expected = 0.0;                   // the shared expectation term
    double total_disc = 0.0;                 // sum over u of disc_U(u)
};
DiscrepancyProfile vertex_clique_profile(const Graph& g, const VertexSet& u_set, int r, double p);

// Number of (r-1)-subsets S avoiding {u,v} with both {u} u S and {v} u S
// r-cliques. Symmetric in (u, v).
std::int64_t pair_clique_count(const Graph& g, int u, int v, int r);

// Sum over ordered vertex pairs of |d(u)^(r-1) - d(v)^(r-1)|.
i128 degree_power_discrepancy(const Graph& g, int r);

// Kruskal-Katona special case: a graph with C(x,2) edges has at most C(x,r)
// r-cliques. Solves for real x and returns the generalized binomial, or
// nullopt when edge_count < C(r,2) (x < r regime, no bound available).
std::optional<double> kk_clique_upper_bound(double edge_count, int r);

// lhs = sum_{i,j} |b_j^s - a_i^s|; rhs_pointwise = n sum b^s - sum b^(s-1) sum a;
// rhs_jensen = sum b^(s-1) (sum b - sum a). lhs >= both for non-negative inputs.
struct PowerSumGap {
    i128 lhs;
    i128 rhs_pointwise;
    i128 rhs_jensen;
};
PowerSumGap power_sum_gap(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                          int s);

}  // namespace quasr
