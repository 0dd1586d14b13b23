#include "quasr/pattern.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace quasr {

Pattern::Pattern(int r, std::vector<std::pair<int, int>> edges)
    : r_(r), edges_(std::move(edges)), adj_(r, 0) {
    if (r < 1 || r > kMaxVertices)
        throw std::invalid_argument("Pattern: vertex count must be in [1, 10]");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= r_) throw std::invalid_argument("Pattern: edge endpoint outside [0, r)");
        if (u == v) throw std::invalid_argument("Pattern: self-loop");
        if ((adj_[u] >> v) & 1u) throw std::invalid_argument("Pattern: duplicate edge");
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
    }
    std::sort(edges_.begin(), edges_.end());
}

int Pattern::degree(int v) const { return std::popcount(adj_[v]); }

bool Pattern::has_isolated_vertex() const {
    for (int v = 0; v < r_; ++v)
        if (adj_[v] == 0) return true;
    return false;
}

std::optional<int> Pattern::girth() const {
    // For each edge, shortest u-v path avoiding that edge closes the
    // shortest cycle through it.
    int best = INT32_MAX;
    for (auto [u, v] : edges_) {
        std::vector<int> dist(r_, -1);
        std::vector<int> queue{u};
        dist[u] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int y = 0; y < r_; ++y) {
                if (!has_edge(x, y) || dist[y] >= 0) continue;
                if ((x == u && y == v) || (x == v && y == u)) continue;
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        if (dist[v] >= 0) best = std::min(best, dist[v] + 1);
    }
    if (best == INT32_MAX) return std::nullopt;
    return best;
}

std::int64_t Pattern::automorphism_count() const {
    std::vector<int> perm(r_);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t count = 0;
    do {
        bool ok = true;
        for (auto [u, v] : edges_) {
            if (!has_edge(perm[u], perm[v])) { ok = false; break; }
        }
        if (ok) {
            // edge counts match, so preserving all edges implies isomorphism
            ++count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::vector<int> Pattern::counting_order() const {
    std::vector<int> order;
    std::uint32_t placed = 0;
    for (int step = 0; step < r_; ++step) {
        int best = -1;
        bool best_adj = false;
        for (int v = 0; v < r_; ++v) {
            if ((placed >> v) & 1u) continue;
            bool adj = (adj_[v] & placed) != 0;
            if (best < 0 || degree(v) > degree(best) ||
                (degree(v) == degree(best) && adj && !best_adj)) {
                best = v;
                best_adj = adj;
            }
        }
        order.push_back(best);
        placed |= 1u << best;
    }
    return order;
}

namespace {
Pattern make_clique(int r) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) e.emplace_back(i, j);
    return Pattern(r, std::move(e));
}
Pattern make_cycle(int r) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < r; ++i) e.emplace_back(i, (i + 1) % r);
    return Pattern(r, std::move(e));
}
Pattern make_path(int r) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < r; ++i) e.emplace_back(i, i + 1);
    return Pattern(r, std::move(e));
}
}  // namespace

std::optional<Pattern> Pattern::try_named(const std::string& name) {
    std::optional<Pattern> p;
    if (name == "K2") p = make_clique(2);
    else if (name == "K3") p = make_clique(3);
    else if (name == "K4") p = make_clique(4);
    else if (name == "K5") p = make_clique(5);
    else if (name == "C4") p = make_cycle(4);
    else if (name == "C5") p = make_cycle(5);
    else if (name == "C6") p = make_cycle(6);
    else if (name == "C8") p = make_cycle(8);
    else if (name == "P3") p = make_path(3);
    else if (name == "P4") p = make_path(4);
    else if (name == "K33") {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
        p = Pattern(6, std::move(e));
    }
    if (p) p->name_ = name;
    return p;
}

Pattern Pattern::named(const std::string& name) {
    auto p = try_named(name);
    if (!p) throw std::invalid_argument("unknown pattern name: " + name);
    return *p;
}

}  // namespace quasr
