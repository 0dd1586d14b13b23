#include "quasr/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quasr {

namespace {

// Shared DFS state for copy/homomorphism counting. Candidate sets are built
// by intersecting the neighborhoods of already-mapped pattern neighbors;
// the final pattern vertex is counted by popcount of its candidate set.
struct MatchDfs {
    const Graph& g;
    std::vector<int> order;                   // pattern vertices in mapping order
    std::vector<std::vector<int>> earlier;    // per position: earlier positions adjacent in H
    std::vector<const Bitset*> base;          // per position: allowed host set
    std::vector<Bitset> cand;                 // per-depth candidate buffers
    std::vector<int> phi;                     // host vertex per position
    Bitset used;
    bool injective;
    i128 total = 0;

    MatchDfs(const Pattern& h, const Graph& host, bool inject)
        : g(host), order(h.counting_order()), used(host.vertex_count()), injective(inject) {
        const int r = h.vertex_count();
        earlier.resize(r);
        for (int pos = 0; pos < r; ++pos)
            for (int j = 0; j < pos; ++j)
                if (h.has_edge(order[pos], order[j])) earlier[pos].push_back(j);
        base.resize(r, nullptr);
        cand.assign(r, Bitset(host.vertex_count()));
        phi.assign(r, -1);
    }

    void run() { step(0); }

    void step(int pos) {
        Bitset& c = cand[pos];
        c = *base[pos];
        for (int j : earlier[pos]) c &= g.neighbors(phi[j]);
        if (injective) c -= used;
        if (pos + 1 == int(order.size())) {
            total = checked_add(total, c.count());
            return;
        }
        c.for_each([&](int v) {
            phi[pos] = v;
            if (injective) used.set(v);
            step(pos + 1);
            if (injective) used.reset(v);
        });
    }
};

void require_disjoint(std::span<const VertexSet> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].intersects(parts[j]))
                throw std::invalid_argument("parts must be pairwise disjoint");
}

}  // namespace

std::int64_t count_homomorphisms(const Pattern& h, const Graph& g,
                                 const std::vector<VertexSet>* targets) {
    if (targets && int(targets->size()) != h.vertex_count())
        throw std::invalid_argument("count_homomorphisms: need one target set per pattern vertex");
    MatchDfs dfs(h, g, /*inject=*/false);
    const Bitset all = g.full_set();
    for (int pos = 0; pos < h.vertex_count(); ++pos)
        dfs.base[pos] = targets ? &(*targets)[dfs.order[pos]] : &all;
    dfs.run();
    return narrow_count(dfs.total);
}

std::int64_t count_labeled_copies(const Pattern& h, const Graph& g, const VertexSet& s) {
    MatchDfs dfs(h, g, /*inject=*/true);
    for (int pos = 0; pos < h.vertex_count(); ++pos) dfs.base[pos] = &s;
    dfs.run();
    return narrow_count(dfs.total);
}

std::int64_t count_labeled_copies(const Pattern& h, const Graph& g) {
    return count_labeled_copies(h, g, g.full_set());
}

std::int64_t count_labeled_copies_through(const Pattern& h, const Graph& g, const VertexSet& s,
                                          int v) {
    const int r = h.vertex_count();
    const bool clique = h.edge_count() == r * (r - 1) / 2;
    if (clique) {
        // the other r-1 vertices form an (r-1)-clique in N(v) ∩ s
        const Bitset cand = g.neighbors(v) & s;
        i128 fact = 1;
        for (int i = 2; i <= r; ++i) fact *= i;
        return narrow_count(checked_mul(i128(count_cliques(g, cand, r - 1)), fact));
    }

    Bitset host = s;
    host.set(v);
    Bitset pin(g.vertex_count());
    pin.set(v);
    i128 total = 0;
    for (int i = 0; i < r; ++i) {
        MatchDfs dfs(h, g, /*inject=*/true);
        for (int pos = 0; pos < r; ++pos)
            dfs.base[pos] = (dfs.order[pos] == i) ? &pin : &host;
        dfs.run();
        total = checked_add(total, dfs.total);
    }
    return narrow_count(total);
}

std::int64_t count_partite_averaged(const Pattern& h, const Graph& g,
                                    std::span<const VertexSet> parts) {
    const int r = h.vertex_count();
    if (int(parts.size()) != r)
        throw std::invalid_argument("count_partite_averaged: need r parts");
    require_disjoint(parts);

    // As in MatchDfs, but each position additionally picks an unused part;
    // injectivity is implied by part disjointness.
    MatchDfs dfs(h, g, /*inject=*/false);
    i128 total = 0;
    std::uint32_t parts_used = 0;
    std::vector<Bitset> buf(r, Bitset(g.vertex_count()));

    auto rec = [&](auto&& self, int pos) -> void {
        for (int pi = 0; pi < r; ++pi) {
            if ((parts_used >> pi) & 1u) continue;
            Bitset& c = buf[pos];
            c = parts[pi];
            for (int j : dfs.earlier[pos]) c &= g.neighbors(dfs.phi[j]);
            if (pos + 1 == r) {
                total = checked_add(total, c.count());
                continue;
            }
            parts_used |= 1u << pi;
            c.for_each([&](int v) {
                dfs.phi[pos] = v;
                self(self, pos + 1);
            });
            parts_used &= ~(1u << pi);
        }
    };
    rec(rec, 0);
    return narrow_count(total);
}

std::int64_t count_partite_ordered(const Pattern& h, const Graph& g,
                                   std::span<const VertexSet> parts, std::span<const int> pi) {
    const int r = h.vertex_count();
    if (int(parts.size()) != r || int(pi.size()) != r)
        throw std::invalid_argument("count_partite_ordered: need r parts and a full assignment");
    require_disjoint(parts);
    std::uint32_t seen = 0;
    for (int x : pi) {
        if (x < 0 || x >= r || ((seen >> x) & 1u))
            throw std::invalid_argument("count_partite_ordered: pi must be a bijection onto [0,r)");
        seen |= 1u << x;
    }
    std::vector<VertexSet> targets;
    targets.reserve(r);
    for (int v = 0; v < r; ++v) targets.push_back(parts[pi[v]]);
    return count_homomorphisms(h, g, &targets);  // injectivity forced by disjointness
}

std::int64_t count_partite_inclusion_exclusion(const Pattern& h, const Graph& g,
                                               std::span<const VertexSet> parts) {
    const int r = h.vertex_count();
    if (int(parts.size()) != r)
        throw std::invalid_argument("count_partite_inclusion_exclusion: need r parts");
    require_disjoint(parts);
    i128 total = 0;
    for (std::uint32_t s = 1; s < (1u << r); ++s) {
        Bitset u(g.vertex_count());
        for (int i = 0; i < r; ++i)
            if ((s >> i) & 1u) u |= parts[i];
        const int sign = ((r - std::popcount(s)) % 2 == 0) ? 1 : -1;
        total = checked_add(total, i128(sign) * i128(count_labeled_copies(h, g, u)));
    }
    return narrow_count(total);
}

namespace {
i128 cliques_rec(const Graph& g, Bitset cand, int need, std::vector<Bitset>& buf, int depth) {
    if (need == 1) return cand.count();
    if (cand.count() < need) return 0;
    i128 total = 0;
    // ascending-order enumeration: strip v, recurse into remaining & N(v)
    std::vector<int> verts = cand.to_vector();
    for (int v : verts) {
        cand.reset(v);
        Bitset& next = buf[depth];
        Bitset::intersect_into(cand, g.neighbors(v), next);
        total = checked_add(total, cliques_rec(g, next, need - 1, buf, depth + 1));
    }
    return total;
}
}  // namespace

std::int64_t count_cliques(const Graph& g, const VertexSet& s, int r) {
    if (r < 1) throw std::invalid_argument("count_cliques: r must be >= 1");
    std::vector<Bitset> buf(r + 1, Bitset(g.vertex_count()));
    return narrow_count(cliques_rec(g, s, r, buf, 0));
}

ClassCountVector count_cross_cliques(const Graph& g, const VertexSet& x, const VertexSet& y,
                                     int r) {
    if (x.intersects(y))
        throw std::invalid_argument("count_cross_cliques: X and Y must be disjoint");
    if (r < 1) throw std::invalid_argument("count_cross_cliques: r must be >= 1");

    ClassCountVector result;
    result.r = r;
    std::vector<i128> acc(r + 1, 0);
    std::vector<Bitset> buf(r + 1, Bitset(g.vertex_count()));

    // Enumerate unlabeled cliques in X u Y, classifying by |clique ∩ X|.
    auto rec = [&](auto&& self, Bitset cand, int need, int in_x, int depth) -> void {
        if (need == 1) {
            acc[in_x + 1] += Bitset::intersection_count(cand, x);
            acc[in_x] += int(cand.count()) - Bitset::intersection_count(cand, x);
            return;
        }
        std::vector<int> verts = cand.to_vector();
        for (int v : verts) {
            cand.reset(v);
            Bitset& next = buf[depth];
            Bitset::intersect_into(cand, g.neighbors(v), next);
            self(self, next, need - 1, in_x + (x.test(v) ? 1 : 0), depth + 1);
        }
    };
    rec(rec, x | y, r, 0, 0);

    i128 fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    result.counts.resize(r + 1);
    for (int i = 0; i <= r; ++i) result.counts[i] = narrow_count(checked_mul(acc[i], fact));
    return result;
}

std::int64_t ClassCountVector::total() const {
    i128 t = 0;
    for (auto c : counts) t = checked_add(t, c);
    return narrow_count(t);
}

DiscrepancyProfile vertex_clique_profile(const Graph& g, const VertexSet& u_set, int r,
                                         double p) {
    if (r < 2) throw std::invalid_argument("vertex_clique_profile: r must be >= 2");
    DiscrepancyProfile prof;
    prof.vertices = u_set.to_vector();
    std::vector<std::int64_t> count(g.vertex_count(), 0);
    std::vector<int> stack;
    std::vector<Bitset> buf(r + 1, Bitset(g.vertex_count()));

    auto rec = [&](auto&& self, Bitset cand, int need, int depth) -> void {
        if (need == 1) {
            const int c = cand.count();
            for (int u : stack) count[u] += c;
            cand.for_each([&](int v) { count[v] += 1; });
            return;
        }
        std::vector<int> verts = cand.to_vector();
        for (int v : verts) {
            cand.reset(v);
            Bitset& next = buf[depth];
            Bitset::intersect_into(cand, g.neighbors(v), next);
            stack.push_back(v);
            self(self, next, need - 1, depth + 1);
            stack.pop_back();
        }
    };
    rec(rec, u_set, r, 0);

    const int usize = u_set.count();
    double expected = std::pow(p, double(r) * (r - 1) / 2.0) * std::pow(double(usize), r - 1);
    for (int i = 2; i < r; ++i) expected /= i;  // divide by (r-1)!
    prof.expected = expected;
    for (int v : prof.vertices) {
        prof.clique_count.push_back(count[v]);
        prof.disc.push_back(std::abs(double(count[v]) - expected));
        prof.total_disc += prof.disc.back();
    }
    return prof;
}

std::int64_t pair_clique_count(const Graph& g, int u, int v, int r) {
    if (u == v) throw std::invalid_argument("pair_clique_count: u and v must differ");
    if (r < 2) throw std::invalid_argument("pair_clique_count: r must be >= 2");
    Bitset common = g.neighbors(u) & g.neighbors(v);
    return count_cliques(g, common, r - 1);
}

i128 degree_power_discrepancy(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("degree_power_discrepancy: r must be >= 2");
    const int n = g.vertex_count();
    std::vector<i128> pw(n);
    for (int v = 0; v < n; ++v) {
        i128 d = g.degree(v), x = 1;
        for (int k = 0; k < r - 1; ++k) x = checked_mul(x, d);
        pw[v] = x;
    }
    std::sort(pw.begin(), pw.end());
    // sum over ordered pairs = 2 * sum_{i<j} (pw[j] - pw[i])
    i128 total = 0, prefix = 0;
    for (int j = 0; j < n; ++j) {
        total = checked_add(total, checked_mul(i128(j), pw[j]) - prefix);
        prefix = checked_add(prefix, pw[j]);
    }
    return checked_mul(total, 2);
}

std::optional<double> kk_clique_upper_bound(double edge_count, int r) {
    if (r < 2) throw std::invalid_argument("kk_clique_upper_bound: r must be >= 2");
    if (edge_count < 0) throw std::invalid_argument("kk_clique_upper_bound: negative edge count");
    const double x = (1.0 + std::sqrt(1.0 + 8.0 * edge_count)) / 2.0;
    if (x < double(r)) return std::nullopt;
    double bound = 1.0;
    for (int k = 0; k < r; ++k) bound *= (x - k) / (k + 1);
    return bound;
}

PowerSumGap power_sum_gap(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                          int s) {
    if (a.size() != b.size())
        throw std::invalid_argument("power_sum_gap: vectors must have equal length");
    if (s < 1) throw std::invalid_argument("power_sum_gap: s must be a positive integer");
    for (auto x : a)
        if (x < 0) throw std::invalid_argument("power_sum_gap: negative entry");
    for (auto x : b)
        if (x < 0) throw std::invalid_argument("power_sum_gap: negative entry");

    const std::size_t n = a.size();
    auto powers = [&](std::span<const std::int64_t> v, int e) {
        std::vector<i128> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            i128 x = 1;
            for (int k = 0; k < e; ++k) x = checked_mul(x, i128(v[i]));
            out[i] = x;
        }
        return out;
    };

    const auto as = powers(a, s);
    const auto bs = powers(b, s);
    const auto bs1 = powers(b, s - 1);

    PowerSumGap gap{0, 0, 0};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const i128 d = bs[j] - as[i];
            gap.lhs = checked_add(gap.lhs, d >= 0 ? d : -d);
        }

    i128 sum_a = 0, sum_b = 0, sum_bs = 0, sum_bs1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sum_a = checked_add(sum_a, a[i]);
        sum_b = checked_add(sum_b, b[i]);
        sum_bs = checked_add(sum_bs, bs[i]);
        sum_bs1 = checked_add(sum_bs1, bs1[i]);
    }
    gap.rhs_pointwise = checked_mul(i128(n), sum_bs) - checked_mul(sum_bs1, sum_a);
    gap.rhs_jensen = checked_mul(sum_bs1, sum_b - sum_a);
    return gap;
}

}  // namespace quasr
