#pragma once

#include "pcg/graph.hpp"
#include "pcg/topology.hpp"
#include "pcg/weighted_tree.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pcg {

struct OracleOptions {
    // 0 = class default: 8 for lpg/mlpg, 6 for pcg.
    int max_n = 0;
    // pcg only: cap on the number of non-edges (each one doubles the case
    // splits per topology).
    int max_nonedges = 12;
    int jobs = 1;
};

struct Verdict {
    GraphClass cls = GraphClass::pcg;
    bool member = false;
    std::optional<Witness> witness;      // present iff member
    std::uint64_t topologies_examined = 0;
    std::uint64_t lp_count = 0;
    std::int64_t elapsed_ms = 0;
    bool exploratory = false;
};

// Weight assignment making g = LPG(topo, 1), i.e. edges at path sum <= 1 and
// non-edges strictly above 1 (slack-maximized), or empty. Weights are
// indexed like topo.edges.
std::optional<std::vector<Rational>> lpg_feasible(const Graph& g, const Topology& topo);

// Mirror image: edges at path sum >= 1, non-edges strictly below.
std::optional<std::vector<Rational>> mlpg_feasible(const Graph& g, const Topology& topo);

struct PcgAssignment {
    std::vector<Rational> weights;
    Rational d_max;  // with d_min fixed to 1
    std::uint64_t lps_solved = 0;
};

// Fixes d_min = 1, keeps d_max a variable, and tries every LOW/HIGH case
// split of the non-edges in Gray-code order. Throws CaseSplitCapError when
// there are more than max_nonedges non-edges.
std::optional<PcgAssignment> pcg_feasible(const Graph& g, const Topology& topo,
                                          int max_nonedges = 12,
                                          std::uint64_t* lps_out = nullptr);

// Exhaustive decision over all (2n-5)!! topologies. MEMBER verdicts carry a
// witness that has already passed verify_witness; NON_MEMBER verdicts have
// examined every topology (and every case split, for pcg). Deterministic for
// fixed inputs regardless of jobs.
Verdict decide(const Graph& g, GraphClass cls, const OracleOptions& options = {});

// decide(build_matrogenic(spec), pcg) for a spec with an antimatching before
// a matching; the verdict is flagged exploratory. Throws PreconditionError
// if the spec does not have that shape.
Verdict probe_open_problem(const MatrogenicSpec& spec, const OracleOptions& options = {});

}  // namespace pcg
