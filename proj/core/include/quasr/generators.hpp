#pragma once

#include <vector>

#include "quasr/graph.hpp"
#include "quasr/rng.hpp"

namespace quasr {

// Block structure of a generated graph, kept in a sidecar so Graph itself
// stays minimal.
struct BlockLayout {
    std::vector<std::vector<int>> blocks;

    int block_of(int v) const;
    VertexSet block_set(int universe, int i) const;
};

// k x k symmetric edge-probability matrix plus block sizes: the generalized
// random graph used for planted instances and the two-block construction.
struct WeightedTemplate {
    int k = 0;
    std::vector<double> weights;  // row-major k*k, symmetric, entries in [0,1]
    std::vector<int> block_sizes;

    WeightedTemplate(int k_, std::vector<double> w, std::vector<int> sizes);
    double weight(int i, int j) const { return weights[i * k + j]; }

    static WeightedTemplate two_block(double diag, double cross, int size_each);
};

struct TemplateGraph {
    Graph graph;
    BlockLayout blocks;
};

// Binomial random graph: every unordered pair independently with probability p.
Graph gen_gnp(int n, double p, Seed seed);

// Blow-up of a weighted template: vertices partitioned per block_sizes in
// index order, pair (u,v) present independently with probability w[b(u)][b(v)].
// With k = 1 and the same seed this produces exactly gen_gnp(n, p, seed).
TemplateGraph expand_template(const WeightedTemplate& t, Seed seed);

// The four-block triangle counterexample: V1, V2 complete, V3, V4 empty,
// complete bipartite between V3 and V4, random bipartite with probability 1/2
// between V1 u V2 and V3 u V4. Requires n divisible by 4, n >= 8.
TemplateGraph build_four_block_counterexample(int n, Seed seed);

}  // namespace quasr
