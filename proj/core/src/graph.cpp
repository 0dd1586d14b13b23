#include "quasr/graph.hpp"

#include <stdexcept>

namespace quasr {

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("Graph::add_edge: vertex outside [0, n)");
    if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

std::int64_t Graph::edges_within(const VertexSet& s) const {
    std::int64_t twice = 0;
    s.for_each([&](int v) { twice += Bitset::intersection_count(adj_[v], s); });
    return twice / 2;
}

std::int64_t Graph::edges_between(const VertexSet& s, const VertexSet& t) const {
    std::int64_t c = 0;
    s.for_each([&](int v) { c += Bitset::intersection_count(adj_[v], t); });
    return c;
}

double Graph::density() const {
    if (n_ < 2) return 0.0;
    return double(m_) / (double(n_) * (n_ - 1) / 2.0);
}

double Graph::pair_density(const VertexSet& a, const VertexSet& b) const {
    const std::int64_t sa = a.count(), sb = b.count();
    if (sa == 0 || sb == 0) return 0.0;
    return double(edges_between(a, b)) / (double(sa) * double(sb));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    const auto verts = s.to_vector();
    Graph h(int(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(int(i), int(j));
    return h;
}

}  // namespace quasr
