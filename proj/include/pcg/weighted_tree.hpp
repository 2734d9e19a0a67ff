#pragma once

#include "pcg/errors.hpp"
#include "pcg/graph.hpp"
#include "pcg/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcg {

struct TreeEdge {
    int a;
    int b;
    Rational weight;
};

// Edge-weighted tree with a bijection between its leaves and the vertices
// 0..L-1 of the graph it represents. Unrooted for all distance purposes; the
// stored root is construction metadata only.
//
// Invariants (validate()): connected, acyclic, weights >= 0, every node of
// degree <= 1 is mapped, mapped nodes have degree <= 1, and the mapped
// vertices are exactly 0..L-1. Unmapped degree-2 nodes are permitted; they
// never affect leaf distances and normalized() removes them.
class WeightedTree {
public:
    WeightedTree() = default;
    explicit WeightedTree(int node_count);

    void add_edge(int a, int b, Rational weight);
    void map_leaf(int node, int vertex);
    void set_root(int node);

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    int leaf_count() const { return static_cast<int>(vertex_to_node_.size()); }
    const std::vector<TreeEdge>& edges() const { return edges_; }
    int degree(int node) const;
    int root() const;

    std::optional<int> vertex_of(int node) const;
    // Tree node carrying graph vertex v; throws UnmappedVertexError.
    int node_of(int vertex) const;

    void validate() const;

    // Sum of edge weights on the unique path between the leaves of u and v.
    Rational leaf_distance(int u, int v) const;

    // L x L symmetric matrix indexed by graph vertex, zero diagonal.
    std::vector<std::vector<Rational>> all_pairs_leaf_distances() const;

    // Distance from each leaf to `node` (graph-vertex indexed).
    std::vector<Rational> depths_from(int node) const;

    // Drops unmapped dangling nodes and suppresses unmapped degree-2 nodes
    // (merging their two edges); leaf distances are unchanged. Node ids are
    // renumbered compactly.
    WeightedTree normalized() const;

    // normalized(), then every unmapped node of degree > 3 is split with
    // zero-weight edges until all unmapped nodes have degree exactly 3.
    // Leaf distances are unchanged.
    WeightedTree binarized() const;

private:
    struct HalfEdge {
        int to;
        Rational weight;
    };

    void check_node(int node) const;
    std::vector<Rational> distances_from_node(int node) const;

    std::vector<std::vector<HalfEdge>> adjacency_;
    std::vector<TreeEdge> edges_;
    std::vector<int> node_to_vertex_;  // -1 = unmapped
    std::vector<int> vertex_to_node_;
    int root_ = -1;
};

// Leaf sets equal and all pairwise leaf distances equal; the notion of
// equality under which serialization round-trips are judged.
bool same_leaf_metric(const WeightedTree& a, const WeightedTree& b);

// ---- evaluation ----

enum class GraphClass { lpg, mlpg, pcg };

std::string to_string(GraphClass cls);
std::optional<GraphClass> graph_class_from_string(const std::string& name);

// Graph on the mapped vertices with an edge (u, v) exactly when
// d_min <= d_T(l_u, l_v) <= d_max. Exact comparisons.
Graph pcg_eval(const WeightedTree& tree, const Rational& d_min, const UpperBound& d_max);

Graph lpg_eval(const WeightedTree& tree, const Rational& d_max);
Graph mlpg_eval(const WeightedTree& tree, const Rational& d_min);

// ---- witnesses ----

struct Witness {
    WeightedTree tree;
    Rational d_min;
    UpperBound d_max;
    GraphClass cls = GraphClass::pcg;

    // d_min >= 0, d_min <= d_max; lpg forces d_min = 0, mlpg forces
    // d_max = +inf. Also validates the tree.
    void validate() const;
};

// True iff evaluating the witness reproduces g exactly: same vertex count,
// same edge set. Throws on an invalid witness.
bool verify_witness(const Graph& g, const Witness& w);

// For leaves u, v, w with P_uv the (weakly) longest of the three pairwise
// paths among them, and any fourth leaf x:
// d(w, x) <= d(u, x) or d(w, x) <= d(v, x).
// Arguments are graph vertices; throws PreconditionError if P_uv is not the
// longest path.
bool check_three_leaf_lemma(const WeightedTree& tree, int u, int v, int w, int x);

}  // namespace pcg
