#pragma once

#include "pcg/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcg {

// Undirected simple graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // Sorted (u, v) pairs with u < v; the canonical edge order.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;

    // Subgraph induced by `subset`, relabeled so that the i-th smallest
    // subset vertex becomes vertex i.
    Graph induced_subgraph(const std::vector<int>& subset) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<bool>> adj_;
};

// Degree partition of a connected graph: boxes B_1..B_r of equal-degree
// vertices, ordered by strictly decreasing degree.
struct DegreePartition {
    std::vector<std::vector<int>> boxes;  // vertex ids ascending within a box
    std::vector<int> degrees;             // strictly decreasing, one per box

    int box_count() const { return static_cast<int>(boxes.size()); }
    // 1-based box index of v, matching the i in the threshold condition.
    int box_of(int v) const;
};

// Throws DisconnectedGraphError; the degree partition (and the threshold
// characterization built on it) is defined for connected graphs only.
DegreePartition degree_partition(const Graph& g);

// A connected graph is threshold iff for all u in B_i, v in B_j, u != v:
// (u,v) is an edge exactly when i + j <= r + 1. Returns the partition on
// success, empty otherwise.
std::optional<DegreePartition> is_threshold(const Graph& g);

// ---- split graphs ----

struct SplitPartition {
    std::vector<int> clique;  // K, ascending
    std::vector<int> stable;  // S, ascending
};

// A split partition with maximum |K|, lexicographically smallest K among
// those; empty if the graph is not split.
std::optional<SplitPartition> split_partition(const Graph& g);

enum class SplitKind { matching, antimatching, clique, stable, other };

std::string to_string(SplitKind kind);
std::optional<SplitKind> split_kind_from_string(const std::string& name);

// matching: |K| = |S| and the K-S edges form a perfect matching.
// antimatching: |K| = |S| and the K-S non-edges form a perfect matching.
// clique: S empty. stable: K empty. Anything else: other.
// When both matching and antimatching fit (possible only at |K| = |S| = 2),
// matching wins.
SplitKind classify_split_component(const Graph& g, const SplitPartition& p);

// Split matching/antimatching with the pairing made explicit: pairs[i] is
// (k_i, s_i), the matched cross edge (matching) or the missing cross edge
// (antimatching), sorted by clique vertex.
struct SplitPairing {
    std::vector<int> clique;
    std::vector<int> stable;
    std::vector<std::pair<int, int>> pairs;
};

std::optional<SplitPairing> recognize_split_matching(const Graph& g);
std::optional<SplitPairing> recognize_split_antimatching(const Graph& g);

// ---- composition and matrogenic builds ----

// Disjoint union of g1 and g2 (g2 relabeled by +g1.n) plus every edge from
// p1's clique to every vertex of g2.
Graph compose(const Graph& g1, const SplitPartition& p1, const Graph& g2);

struct MatrogenicComponent {
    SplitKind kind;  // matching, antimatching, clique or stable
    int size;        // pair count for (anti)matchings, vertex count otherwise
};

struct MatrogenicSpec {
    std::vector<MatrogenicComponent> components;
    void validate() const;
};

// Vertex ranges of one component inside a matrogenic build. Clique vertices
// come first, stable vertices after them, both contiguous.
struct ComponentSpan {
    SplitKind kind = SplitKind::other;
    int clique_first = 0;
    int clique_count = 0;
    int stable_first = 0;
    int stable_count = 0;

    std::vector<int> clique_vertices() const;
    std::vector<int> stable_vertices() const;
};

struct MatrogenicBuild {
    Graph graph;
    std::vector<ComponentSpan> components;
};

// The split graph denoted by one spec component, on its own vertex ids:
// clique vertices 0..k-1, stable vertices k..k+s-1.
Graph component_graph(SplitKind kind, int size);

// Left fold of compose over the component graphs.
MatrogenicBuild build_matrogenic(const MatrogenicSpec& spec);

// ---- generators ----

Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);
Graph complete_graph(int n);

// Threshold graph from a creation sequence: start from a single vertex, then
// for each entry add a dominating vertex (true) or an isolated one (false).
Graph threshold_graph(const std::vector<bool>& joins);

// Random connected threshold graph on n vertices (the last inserted vertex
// is forced dominating). Deterministic for a given seed.
Graph random_threshold(int n, std::uint64_t seed);

// Clique 0..k-1, stable k..2k-1, cross edges (i, k+i).
Graph split_matching(int k);
// Clique 0..k-1, stable k..2k-1, cross edges (i, k+j) for i != j; for k = 1
// there is no cross edge at all.
Graph split_antimatching(int k);

// Some induced cycle with at least min_len vertices, in traversal order, or
// empty if none exists. Exhaustive subset search; meant for n <= 12.
std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g, int min_len = 5);

// ---- edge-list text format ----
// "n <count>" header, one "e <u> <v>" line per edge, '#' comments.

Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace pcg
