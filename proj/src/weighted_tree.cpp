#include "pcg/weighted_tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcg {

WeightedTree::WeightedTree(int node_count) {
    if (node_count < 1) throw InvalidTreeError("tree needs at least one node");
    adjacency_.assign(node_count, {});
    node_to_vertex_.assign(node_count, -1);
}

void WeightedTree::check_node(int node) const {
    if (node < 0 || node >= node_count())
        throw InvalidTreeError("tree node " + std::to_string(node) + " out of range");
}

void WeightedTree::add_edge(int a, int b, Rational weight) {
    check_node(a);
    check_node(b);
    if (a == b) throw InvalidTreeError("tree edge endpoints must differ");
    if (weight < 0) throw InvalidTreeError("tree edge weights must be nonnegative");
    adjacency_[a].push_back({b, weight});
    adjacency_[b].push_back({a, weight});
    edges_.push_back({a, b, std::move(weight)});
}

void WeightedTree::map_leaf(int node, int vertex) {
    check_node(node);
    if (vertex < 0) throw InvalidTreeError("mapped vertices must be nonnegative");
    if (node_to_vertex_[node] != -1)
        throw InvalidTreeError("tree node " + std::to_string(node) + " mapped twice");
    if (vertex >= static_cast<int>(vertex_to_node_.size()))
        vertex_to_node_.resize(vertex + 1, -1);
    if (vertex_to_node_[vertex] != -1)
        throw InvalidTreeError("graph vertex " + std::to_string(vertex) + " mapped twice");
    node_to_vertex_[node] = vertex;
    vertex_to_node_[vertex] = node;
}

void WeightedTree::set_root(int node) {
    check_node(node);
    root_ = node;
}

int WeightedTree::degree(int node) const {
    check_node(node);
    return static_cast<int>(adjacency_[node].size());
}

int WeightedTree::root() const {
    if (root_ >= 0) return root_;
    // default: first unmapped node, else node 0
    for (int v = 0; v < node_count(); ++v)
        if (node_to_vertex_[v] == -1) return v;
    return 0;
}

std::optional<int> WeightedTree::vertex_of(int node) const {
    check_node(node);
    if (node_to_vertex_[node] == -1) return std::nullopt;
    return node_to_vertex_[node];
}

int WeightedTree::node_of(int vertex) const {
    if (vertex < 0 || vertex >= static_cast<int>(vertex_to_node_.size()) ||
        vertex_to_node_[vertex] == -1)
        throw UnmappedVertexError("graph vertex " + std::to_string(vertex) +
                                  " has no leaf in the tree");
    return vertex_to_node_[vertex];
}

void WeightedTree::validate() const {
    const int n = node_count();
    if (static_cast<int>(edges_.size()) != n - 1)
        throw InvalidTreeError("tree must have exactly node_count - 1 edges");

    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& half : adjacency_[v]) {
            if (!seen[half.to]) {
                seen[half.to] = true;
                ++reached;
                stack.push_back(half.to);
            }
        }
    }
    if (reached != n) throw InvalidTreeError("tree is not connected");

    for (int v = 0; v < n; ++v) {
        const bool mapped = node_to_vertex_[v] != -1;
        const int deg = degree(v);
        if (mapped && deg > 1)
            throw InvalidTreeError("mapped node " + std::to_string(v) + " is internal");
        if (!mapped && deg <= 1)
            throw InvalidTreeError("unmapped node " + std::to_string(v) + " is a leaf");
    }
    for (int vertex = 0; vertex < static_cast<int>(vertex_to_node_.size()); ++vertex)
        if (vertex_to_node_[vertex] == -1)
            throw InvalidTreeError("mapped vertices must be exactly 0..L-1; vertex " +
                                   std::to_string(vertex) + " is missing");
}

std::vector<Rational> WeightedTree::distances_from_node(int node) const {
    std::vector<Rational> dist(node_count(), Rational(0));
    std::vector<bool> seen(node_count(), false);
    std::vector<int> stack = {node};
    seen[node] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& half : adjacency_[v]) {
            if (!seen[half.to]) {
                seen[half.to] = true;
                dist[half.to] = dist[v] + half.weight;
                stack.push_back(half.to);
            }
        }
    }
    return dist;
}

Rational WeightedTree::leaf_distance(int u, int v) const {
    const int nu = node_of(u);
    const int nv = node_of(v);
    if (nu == nv) return Rational(0);
    return distances_from_node(nu)[nv];
}

std::vector<std::vector<Rational>> WeightedTree::all_pairs_leaf_distances() const {
    const int leaves = leaf_count();
    std::vector<std::vector<Rational>> matrix(leaves, std::vector<Rational>(leaves, Rational(0)));
    for (int u = 0; u < leaves; ++u) {
        const auto dist = distances_from_node(node_of(u));
        for (int v = 0; v < leaves; ++v)
            if (v != u) matrix[u][v] = dist[node_of(v)];
    }
    return matrix;
}

std::vector<Rational> WeightedTree::depths_from(int node) const {
    check_node(node);
    const auto dist = distances_from_node(node);
    std::vector<Rational> out(leaf_count());
    for (int v = 0; v < leaf_count(); ++v) out[v] = dist[node_of(v)];
    return out;
}

namespace {

struct MutableTree {
    // adjacency as (neighbor, weight); parallel edges cannot arise from a tree
    std::map<int, std::vector<std::pair<int, Rational>>> adj;
    std::map<int, int> vertex;  // node -> mapped vertex
    int root = -1;
    int next_id = 0;

    static MutableTree from(const WeightedTree& t) {
        MutableTree m;
        for (int v = 0; v < t.node_count(); ++v) m.adj[v];
        for (const auto& e : t.edges()) {
            m.adj[e.a].emplace_back(e.b, e.weight);
            m.adj[e.b].emplace_back(e.a, e.weight);
        }
        for (int v = 0; v < t.node_count(); ++v)
            if (auto mapped = t.vertex_of(v)) m.vertex[v] = *mapped;
        m.root = t.root();
        m.next_id = t.node_count();
        return m;
    }

    void drop_edge(int a, int b) {
        auto& na = adj[a];
        na.erase(std::find_if(na.begin(), na.end(), [&](auto& p) { return p.first == b; }));
        auto& nb = adj[b];
        nb.erase(std::find_if(nb.begin(), nb.end(), [&](auto& p) { return p.first == a; }));
    }

    WeightedTree build() const {
        std::map<int, int> renumber;
        for (const auto& [node, _] : adj) renumber[node] = static_cast<int>(renumber.size());
        WeightedTree out(static_cast<int>(adj.size()));
        std::set<std::pair<int, int>> emitted;
        for (const auto& [node, halves] : adj) {
            for (const auto& [to, w] : halves) {
                const int a = renumber.at(node);
                const int b = renumber.at(to);
                if (emitted.count({std::min(a, b), std::max(a, b)})) continue;
                emitted.insert({std::min(a, b), std::max(a, b)});
                out.add_edge(a, b, w);
            }
        }
        for (const auto& [node, v] : vertex) out.map_leaf(renumber.at(node), v);
        if (root >= 0 && renumber.count(root)) out.set_root(renumber.at(root));
        return out;
    }
};

}  // namespace

WeightedTree WeightedTree::normalized() const {
    MutableTree m = MutableTree::from(*this);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = m.adj.begin(); it != m.adj.end(); ++it) {
            const int node = it->first;
            if (m.vertex.count(node)) continue;
            const auto& halves = it->second;
            if (halves.size() == 1 && m.adj.size() > 1) {
                const int neighbor = halves[0].first;
                m.drop_edge(node, neighbor);
                if (m.root == node) m.root = -1;
                m.adj.erase(node);
                changed = true;
                break;
            }
            if (halves.size() == 2) {
                const auto [x, wx] = halves[0];
                const auto [y, wy] = halves[1];
                m.drop_edge(node, x);
                m.drop_edge(node, y);
                m.adj[x].emplace_back(y, wx + wy);
                m.adj[y].emplace_back(x, wx + wy);
                if (m.root == node) m.root = -1;
                m.adj.erase(node);
                changed = true;
                break;
            }
        }
    }
    return m.build();
}

WeightedTree WeightedTree::binarized() const {
    MutableTree m = MutableTree::from(normalized());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = m.adj.begin(); it != m.adj.end(); ++it) {
            const int node = it->first;
            if (m.vertex.count(node)) continue;
            if (it->second.size() <= 3) continue;
            // keep the two smallest-id neighbors, hand the rest to a new node
            auto halves = it->second;
            std::sort(halves.begin(), halves.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            const int fresh = m.next_id++;
            m.adj[fresh];
            for (std::size_t i = 2; i < halves.size(); ++i) {
                m.drop_edge(node, halves[i].first);
                m.adj[fresh].emplace_back(halves[i].first, halves[i].second);
                m.adj[halves[i].first].emplace_back(fresh, halves[i].second);
            }
            m.adj[node].emplace_back(fresh, Rational(0));
            m.adj[fresh].emplace_back(node, Rational(0));
            changed = true;
            break;
        }
    }
    return m.build();
}

bool same_leaf_metric(const WeightedTree& a, const WeightedTree& b) {
    if (a.leaf_count() != b.leaf_count()) return false;
    return a.all_pairs_leaf_distances() == b.all_pairs_leaf_distances();
}

// ---- evaluation ----

std::string to_string(GraphClass cls) {
    switch (cls) {
        case GraphClass::lpg: return "lpg";
        case GraphClass::mlpg: return "mlpg";
        case GraphClass::pcg: return "pcg";
    }
    return "pcg";
}

std::optional<GraphClass> graph_class_from_string(const std::string& name) {
    if (name == "lpg" || name == "LPG") return GraphClass::lpg;
    if (name == "mlpg" || name == "mLPG" || name == "MLPG") return GraphClass::mlpg;
    if (name == "pcg" || name == "PCG") return GraphClass::pcg;
    return std::nullopt;
}

Graph pcg_eval(const WeightedTree& tree, const Rational& d_min, const UpperBound& d_max) {
    if (d_min < 0) throw InvalidBoundsError("d_min must be nonnegative");
    if (!d_max.is_infinite() && d_max.value() < d_min)
        throw InvalidBoundsError("d_min must not exceed d_max");
    tree.validate();

    const int n = tree.leaf_count();
    const auto dist = tree.all_pairs_leaf_distances();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (d_min <= dist[u][v] && d_max.admits(dist[u][v])) g.add_edge(u, v);
    return g;
}

Graph lpg_eval(const WeightedTree& tree, const Rational& d_max) {
    return pcg_eval(tree, Rational(0), UpperBound(d_max));
}

Graph mlpg_eval(const WeightedTree& tree, const Rational& d_min) {
    return pcg_eval(tree, d_min, UpperBound::infinity());
}

// ---- witnesses ----

void Witness::validate() const {
    tree.validate();
    if (d_min < 0) throw InvalidBoundsError("witness d_min must be nonnegative");
    if (!d_max.admits(d_min)) throw InvalidBoundsError("witness needs d_min <= d_max");
    if (cls == GraphClass::lpg && d_min != 0)
        throw InvalidBoundsError("lpg witnesses have d_min = 0");
    if (cls == GraphClass::mlpg && !d_max.is_infinite())
        throw InvalidBoundsError("mlpg witnesses have d_max = +inf");
}

bool verify_witness(const Graph& g, const Witness& w) {
    w.validate();
    return pcg_eval(w.tree, w.d_min, w.d_max) == g;
}

bool check_three_leaf_lemma(const WeightedTree& tree, int u, int v, int w, int x) {
    if (u == v || u == w || u == x || v == w || v == x || w == x)
        throw PreconditionError("three-leaf lemma needs four distinct leaves");
    const Rational duv = tree.leaf_distance(u, v);
    if (duv < tree.leaf_distance(u, w) || duv < tree.leaf_distance(v, w))
        throw PreconditionError("P_uv must be the longest path among u, v, w");
    const Rational dwx = tree.leaf_distance(w, x);
    return dwx <= tree.leaf_distance(u, x) || dwx <= tree.leaf_distance(v, x);
}

}  // namespace pcg
