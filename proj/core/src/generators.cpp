#include "quasr/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace quasr {

int BlockLayout::block_of(int v) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int u : blocks[i])
            if (u == v) return int(i);
    return -1;
}

VertexSet BlockLayout::block_set(int universe, int i) const {
    Bitset s(universe);
    for (int v : blocks.at(i)) s.set(v);
    return s;
}

WeightedTemplate::WeightedTemplate(int k_, std::vector<double> w, std::vector<int> sizes)
    : k(k_), weights(std::move(w)), block_sizes(std::move(sizes)) {
    if (k < 1) throw std::invalid_argument("WeightedTemplate: k must be >= 1");
    if (int(weights.size()) != k * k)
        throw std::invalid_argument("WeightedTemplate: weight matrix must be k x k");
    if (int(block_sizes.size()) != k)
        throw std::invalid_argument("WeightedTemplate: need one size per block");
    for (double w_ : weights)
        if (!(w_ >= 0.0 && w_ <= 1.0))
            throw std::invalid_argument("WeightedTemplate: weights must lie in [0,1]");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < i; ++j)
            if (weight(i, j) != weight(j, i))
                throw std::invalid_argument("WeightedTemplate: weights must be symmetric");
    for (int s : block_sizes)
        if (s < 1) throw std::invalid_argument("WeightedTemplate: block sizes must be positive");
}

WeightedTemplate WeightedTemplate::two_block(double diag, double cross, int size_each) {
    return WeightedTemplate(2, {diag, cross, cross, diag}, {size_each, size_each});
}

Graph gen_gnp(int n, double p, Seed seed) {
    if (n < 1) throw std::invalid_argument("gen_gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must lie in [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

TemplateGraph expand_template(const WeightedTemplate& t, Seed seed) {
    const int n = std::accumulate(t.block_sizes.begin(), t.block_sizes.end(), 0);
    if (n < 2) throw std::invalid_argument("expand_template: need at least 2 vertices");

    std::vector<int> block_of(n);
    BlockLayout layout;
    layout.blocks.resize(t.k);
    int next = 0;
    for (int b = 0; b < t.k; ++b)
        for (int i = 0; i < t.block_sizes[b]; ++i) {
            block_of[next] = b;
            layout.blocks[b].push_back(next);
            ++next;
        }

    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(t.weight(block_of[u], block_of[v]))) g.add_edge(u, v);
    return {std::move(g), std::move(layout)};
}

TemplateGraph build_four_block_counterexample(int n, Seed seed) {
    if (n < 8) throw std::invalid_argument("counterexample: n must be >= 8");
    if (n % 4 != 0) throw std::invalid_argument("counterexample: n must be divisible by 4");

    const int q = n / 4;
    auto block = [&](int v) { return v / q; };

    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int bu = block(u), bv = block(v);
            if (bu == bv) {
                if (bu <= 1) g.add_edge(u, v);  // V1, V2 complete; V3, V4 empty
            } else if (bu >= 2 && bv >= 2) {
                g.add_edge(u, v);  // complete bipartite V3-V4
            } else if (bu <= 1 && bv <= 1) {
                // no edges between V1 and V2
            } else {
                if (rng.bernoulli(0.5)) g.add_edge(u, v);
            }
        }
    }

    BlockLayout layout;
    layout.blocks.resize(4);
    for (int v = 0; v < n; ++v) layout.blocks[block(v)].push_back(v);
    return {std::move(g), std::move(layout)};
}

}  // namespace quasr
