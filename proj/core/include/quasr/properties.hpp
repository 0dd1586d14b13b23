#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quasr/counting.hpp"
#include "quasr/graph.hpp"
#include "quasr/pattern.hpp"
#include "quasr/rng.hpp"

namespace quasr {

// Property families of the quasirandomness hierarchy:
//   Global          - copy count of H over the full vertex set
//   Hereditary      - copy count over every induced subset simultaneously
//   Partite         - copies with one vertex per part, all assignments (Q)
//   OrderedPartite  - copies with vertex v landing in part pi(v) (R)
enum class PropertyFamily { Global, Hereditary, Partite, OrderedPartite };

const char* family_name(PropertyFamily f);

struct SampledParams {
    int samples = 200;
    Seed seed;
    bool local_search = true;
};

// Measured defect of a graph with respect to one property family.
//
// Conventions (used everywhere): a labeled copy count is compared against
// p^m |S|^r (Global/Hereditary), p^m r! prod|V_i| (Partite) or
// p^m prod|V_i| (OrderedPartite), and the defect is the max absolute
// deviation over examined witnesses divided by n^r. For K2 the labeled count
// is e(S,S) = 2 e(S), matching the e(S,S) = p|S|^2 +- gamma n^2 convention.
struct DefectReport {
    PropertyFamily family;
    std::string pattern;
    int pattern_order = 0;
    double p = 0.0;
    double defect = 0.0;         // max |count - expected| / n^r
    double deviation = 0.0;      // |count - expected| at the witness
    std::int64_t witness_count = 0;
    double witness_expected = 0.0;
    std::vector<VertexSet> witness;  // one set (Global/Hereditary) or r parts
    std::vector<int> witness_pi;     // OrderedPartite only
    bool exact = false;
    std::optional<SampledParams> sampled;
};

DefectReport defect_global(const Graph& g, const Pattern& h, double p);

// Exact mode enumerates all 2^n subsets (Gray-code walk with incremental
// K2/K3/K_r updates; general patterns are recounted per subset). Caps:
// n <= 24 for r <= 3, n <= 20 for larger cliques, n <= 18 otherwise.
DefectReport defect_hereditary_exact(const Graph& g, const Pattern& h, double p);
int hereditary_exact_cap(const Pattern& h);

// Sampled mode examines `samples` random subsets (vertex kept with
// probability 1/2, substream per sample index), each optionally improved by
// single-vertex hill climbing on |deviation| for up to 5n steps.
DefectReport defect_hereditary_sampled(const Graph& g, const Pattern& h, double p,
                                       const SampledParams& sp);

// Exact partite modes enumerate every assignment of vertices to r disjoint
// parts (or none). Caps: n <= 16, r <= 4.
DefectReport defect_partite_exact(const Graph& g, const Pattern& h, double p);
DefectReport defect_ordered_partite_exact(const Graph& g, const Pattern& h, double p);
DefectReport defect_partite_sampled(const Graph& g, const Pattern& h, double p,
                                    const SampledParams& sp);
DefectReport defect_ordered_partite_sampled(const Graph& g, const Pattern& h, double p,
                                            const SampledParams& sp);

// Recomputes the witness deviation of a report from scratch via the direct
// counting route; used by the witness-honesty checks and the CLI.
double reevaluate_witness(const Graph& g, const Pattern& h, const DefectReport& report);

// gamma_hat = exact edge-hereditary defect, rho_hat = exact K_r-hereditary
// defect; the counting lemma gives rho_hat <= r^2 gamma_hat.
struct TransferCheck {
    double gamma2 = 0.0;
    double rho_r = 0.0;
    bool holds = false;
};
TransferCheck counting_transfer_check(const Graph& g, int r, double p);

// Randomized search for a set of order n/2 whose edge count deviates from
// q * C(|S'|,2) by at least |dev(s)| / 5 (slack below the guaranteed
// (1/4 + o(1)) to absorb finite-n effects).
struct HalveResult {
    VertexSet s_prime;
    double deviation = 0.0;      // signed e(S') - q C(|S'|,2)
    double threshold = 0.0;      // D / 5
    bool below_threshold = false;
};
HalveResult egps_halve(const Graph& g, const VertexSet& s, double q, Seed seed,
                       int retries = 32);

// One run of the random-split experiment: X = S ∩ A for a uniform random A,
// Y a uniform random half of the complement of A, both trimmed to equal
// size. Across seeds the gap concentrates near e(S)/4 - e(G)/16.
struct SplitOutcome {
    VertexSet x, y;
    std::int64_t ex = 0, ey = 0;
    std::int64_t gap = 0;  // ex - ey
};
SplitOutcome split_deviation_experiment(const Graph& g, const VertexSet& s, Seed seed);

}  // namespace quasr
