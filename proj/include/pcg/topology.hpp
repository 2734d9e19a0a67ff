#pragma once

#include "pcg/errors.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace pcg {

// Unrooted binary tree shape on n labeled leaves: nodes 0..n-1 are the
// leaves, nodes n..2n-3 are internal and have degree exactly 3. There are
// (2n-5)!! of these; the enumeration order is fixed, which is what makes
// oracle verdicts deterministic.
struct Topology {
    int leaf_count = 0;
    std::vector<std::pair<int, int>> edges;  // 2n-3 edges

    int node_count() const { return 2 * leaf_count - 2; }
};

// (2n-5)!! for n >= 3; 1 for n < 3.
std::uint64_t topology_count(int n);

// Visits every topology on n leaves exactly once, by inserting leaf k into
// each edge of each (k-1)-leaf shape. Stops early if the visitor returns
// false. Requires 3 <= n <= cap (CapExceededError otherwise).
void for_each_topology(int n, const std::function<bool(const Topology&)>& visit, int cap = 8);

std::vector<Topology> enumerate_topologies(int n, int cap = 8);

}  // namespace pcg
