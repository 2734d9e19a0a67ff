#pragma once

#include "pcg/graph.hpp"
#include "pcg/weighted_tree.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pcg {

// Audit record emitted by every witness constructor. Constructors self-check
// by round-trip evaluation before returning, so a trace in hand is already a
// verified membership certificate.
struct ConstructionTrace {
    Witness witness;
    // (graph vertex, distance from its leaf to the construction root)
    std::vector<std::pair<int, Rational>> leaf_depths;
    // Stable id of the construction, e.g. "threshold-lpg".
    std::string construction;
    // True when the edge weights are this library's reconstruction rather
    // than part of the published construction; the round-trip check is the
    // sole authority for those.
    bool reconstructed = false;
};

// Threshold graph on boxes B_1..B_r: star with center c, leaf of v in B_i at
// weight i, d_max = r + 1. Throws NotThresholdError.
ConstructionTrace threshold_lpg_construction(const Graph& g);
Witness threshold_lpg_witness(const Graph& g);

// Same star with weight r + 1 - i and d_min = r + 1, so that
// d(l_u, l_v) = 2(r+1) - (i+j).
ConstructionTrace threshold_mlpg_construction(const Graph& g);
Witness threshold_mlpg_witness(const Graph& g);

// Split matching with pairs (k_i, s_i), i = 1..n: unit-weight spine of n
// nodes, spine node i carrying leaf a_i (weight 1, vertex k_i) and leaf b_i
// (weight n, vertex s_i); d_max = n + 1. Throws NotSplitMatchingError.
ConstructionTrace split_matching_lpg_construction(const Graph& g);
Witness split_matching_lpg_witness(const Graph& g);

// Split antimatching with non-edge pairs (k_i, s_i): unit-weight spine,
// spine node i carrying leaf a_i (weight n, vertex k_i) and leaf b_i
// (weight 1, vertex s_i); d_min = n + 2. The weights are reconstructed
// (trace.reconstructed is set). Throws NotSplitAntimatchingError.
ConstructionTrace split_antimatching_mlpg_construction(const Graph& g);
Witness split_antimatching_mlpg_witness(const Graph& g);

// Matching sequence (matching / clique / stable components): one root, and
// for component i and pair index s an internal node u at weight i from the
// root with leaf a_s at weight 1 and leaf b_s at weight d_max - 2i, where
// d_max = 2(t+1). Throws UnsupportedComponentError on an antimatching.
ConstructionTrace matching_sequence_construction(const MatrogenicSpec& spec);
Witness matching_sequence_witness(const MatrogenicSpec& spec);

// Antimatching sequence (antimatching / clique / stable components): same
// shape with leaf a_s at weight d_min - 2i - 1 and leaf b_s at weight 1,
// where d_min = 2(t+1) + 1. Throws UnsupportedComponentError on a matching.
ConstructionTrace antimatching_sequence_construction(const MatrogenicSpec& spec);
Witness antimatching_sequence_witness(const MatrogenicSpec& spec);

// Matrogenic composition with every matching before every antimatching:
// matching-sequence tree over the prefix (bound m = 2(t+1) + 1),
// antimatching-sequence tree over the suffix keeping global component
// indices, roots joined by an edge of weight m/2, every leaf edge of the
// prefix tree raised by m/2; d_min = m, d_max = 2m. Degenerate cases with no
// antimatching (or no prefix) fall back to the plain sequence witness,
// retagged pcg. Throws OrderViolationError if a matching follows an
// antimatching.
ConstructionTrace matrogenic_construction(const MatrogenicSpec& spec);
Witness matrogenic_witness(const MatrogenicSpec& spec);

}  // namespace pcg
