#include "pcg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>

namespace pcg {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw Error("vertex count must be nonnegative");
    adj_.assign(n, std::vector<bool>(n, false));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw Error("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("self-loops are not allowed");
    if (adj_[u][v]) return;
    adj_[u][v] = adj_[v][u] = true;
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u][v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(std::count(adj_[v].begin(), adj_[v].end(), true));
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_[v][u]) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[u][v]) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<bool> seen(n_, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u) {
            if (adj_[v][u] && !seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n_;
}

Graph Graph::induced_subgraph(const std::vector<int>& subset) const {
    std::vector<int> verts = subset;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != subset.size()) throw Error("induced_subgraph: duplicate vertices");
    for (int v : verts) check_vertex(v);
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (adj_[verts[i]][verts[j]]) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

// ---- degree partition / threshold ----

int DegreePartition::box_of(int v) const {
    for (int i = 0; i < box_count(); ++i)
        if (std::binary_search(boxes[i].begin(), boxes[i].end(), v)) return i + 1;
    throw Error("vertex " + std::to_string(v) + " not in any box");
}

DegreePartition degree_partition(const Graph& g) {
    if (!g.is_connected())
        throw DisconnectedGraphError("degree partition requires a connected graph");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> by_degree;  // (-degree, vertex)
    by_degree.reserve(n);
    for (int v = 0; v < n; ++v) by_degree.emplace_back(-g.degree(v), v);
    std::sort(by_degree.begin(), by_degree.end());

    DegreePartition part;
    for (const auto& [neg_deg, v] : by_degree) {
        const int deg = -neg_deg;
        if (part.degrees.empty() || part.degrees.back() != deg) {
            part.degrees.push_back(deg);
            part.boxes.emplace_back();
        }
        part.boxes.back().push_back(v);
    }
    return part;
}

std::optional<DegreePartition> is_threshold(const Graph& g) {
    DegreePartition part = degree_partition(g);
    const int r = part.box_count();
    const int n = g.vertex_count();
    std::vector<int> box(n);
    for (int i = 0; i < r; ++i)
        for (int v : part.boxes[i]) box[v] = i + 1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool should = box[u] + box[v] <= r + 1;
            if (g.has_edge(u, v) != should) return std::nullopt;
        }
    }
    return part;
}

// ---- split partitions ----

namespace {

bool induces_clique(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

bool induces_stable(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) return false;
    return true;
}

void validate_partition(const Graph& g, const SplitPartition& p) {
    const int n = g.vertex_count();
    std::vector<int> count(n, 0);
    for (int v : p.clique) {
        if (v < 0 || v >= n) throw InvalidPartitionError("partition vertex out of range");
        ++count[v];
    }
    for (int v : p.stable) {
        if (v < 0 || v >= n) throw InvalidPartitionError("partition vertex out of range");
        ++count[v];
    }
    for (int v = 0; v < n; ++v)
        if (count[v] != 1)
            throw InvalidPartitionError("partition must cover every vertex exactly once");
    if (!induces_clique(g, p.clique))
        throw InvalidPartitionError("clique side is not complete");
    if (!induces_stable(g, p.stable))
        throw InvalidPartitionError("stable side is not independent");
}

}  // namespace

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return SplitPartition{};

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> sorted = deg;
    std::sort(sorted.rbegin(), sorted.rend());

    // Largest m with d_m >= m-1 (degrees nonincreasing, 1-based), then the
    // split test: sum of the m largest degrees == m(m-1) + sum of the rest.
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (sorted[i - 1] >= i - 1) m = i;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i) (i < m ? head : tail) += sorted[i];
    if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;

    // In any maximum-clique split partition, K holds every vertex of degree
    // >= m plus clique completions among the degree m-1 vertices. Each valid
    // completion is a connected component of the candidate set, so the
    // lexicographically smallest K is decided by component minima.
    std::vector<int> forced, ties;
    for (int v = 0; v < n; ++v) {
        if (deg[v] >= m) forced.push_back(v);
        else if (deg[v] == m - 1) ties.push_back(v);
    }
    const int need = m - static_cast<int>(forced.size());

    std::vector<int> clique = forced;
    if (need > 0) {
        std::vector<int> eligible;
        for (int v : ties) {
            bool adj_all = true;
            for (int f : forced)
                if (!g.has_edge(v, f)) { adj_all = false; break; }
            if (adj_all) eligible.push_back(v);
        }
        std::vector<bool> in_eligible(n, false);
        for (int v : eligible) in_eligible[v] = true;
        std::vector<int> usable;
        for (int v : eligible) {
            bool ok = true;
            for (int u : g.neighbors(v)) {
                if (deg[u] >= m) continue;  // in forced
                if (!in_eligible[u]) { ok = false; break; }
            }
            if (ok) usable.push_back(v);
        }
        // Components of the usable set, in order of their smallest vertex.
        std::vector<bool> visited(n, false);
        std::vector<bool> in_usable(n, false);
        for (int v : usable) in_usable[v] = true;
        std::optional<std::vector<int>> completion;
        for (int start : usable) {
            if (visited[start]) continue;
            std::vector<int> component, stack = {start};
            visited[start] = true;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                component.push_back(v);
                for (int u : g.neighbors(v)) {
                    if (in_usable[u] && !visited[u]) {
                        visited[u] = true;
                        stack.push_back(u);
                    }
                }
            }
            if (static_cast<int>(component.size()) == need && induces_clique(g, component)) {
                completion = component;
                break;
            }
        }
        if (!completion)
            throw Error("split partition: no clique completion despite split degree sequence");
        clique.insert(clique.end(), completion->begin(), completion->end());
    }

    std::sort(clique.begin(), clique.end());
    std::vector<bool> in_clique(n, false);
    for (int v : clique) in_clique[v] = true;
    SplitPartition part;
    part.clique = clique;
    for (int v = 0; v < n; ++v)
        if (!in_clique[v]) part.stable.push_back(v);
    validate_partition(g, part);
    return part;
}

std::string to_string(SplitKind kind) {
    switch (kind) {
        case SplitKind::matching: return "matching";
        case SplitKind::antimatching: return "antimatching";
        case SplitKind::clique: return "clique";
        case SplitKind::stable: return "stable";
        case SplitKind::other: return "other";
    }
    return "other";
}

std::optional<SplitKind> split_kind_from_string(const std::string& name) {
    if (name == "matching") return SplitKind::matching;
    if (name == "antimatching") return SplitKind::antimatching;
    if (name == "clique") return SplitKind::clique;
    if (name == "stable") return SplitKind::stable;
    if (name == "other") return SplitKind::other;
    return std::nullopt;
}

SplitKind classify_split_component(const Graph& g, const SplitPartition& p) {
    validate_partition(g, p);
    if (p.stable.empty()) return SplitKind::clique;
    if (p.clique.empty()) return SplitKind::stable;
    if (p.clique.size() != p.stable.size()) return SplitKind::other;

    const int k = static_cast<int>(p.clique.size());
    bool matching = true, antimatching = true;
    for (int s : p.stable) {
        int cross = 0;
        for (int c : p.clique)
            if (g.has_edge(c, s)) ++cross;
        if (cross != 1) matching = false;
        if (cross != k - 1) antimatching = false;
    }
    for (int c : p.clique) {
        int cross = 0;
        for (int s : p.stable)
            if (g.has_edge(c, s)) ++cross;
        if (cross != 1) matching = false;
        if (cross != k - 1) antimatching = false;
    }
    if (matching) return SplitKind::matching;
    if (antimatching) return SplitKind::antimatching;
    return SplitKind::other;
}

namespace {

// Split matchings and antimatchings have rigid degree profiles once k >= 2:
// clique vertices have degree k (resp. 2k-2) and stable vertices degree 1
// (resp. k-1). k = 1 is handled directly.
std::optional<SplitPairing> recognize_cross_structure(const Graph& g, bool matching) {
    const int n = g.vertex_count();
    if (n < 2 || n % 2 != 0) return std::nullopt;
    const int k = n / 2;

    SplitPairing out;
    if (k == 1) {
        const bool edge = g.has_edge(0, 1);
        if (edge != matching) return std::nullopt;
        out.clique = {0};
        out.stable = {1};
        out.pairs = {{0, 1}};
        return out;
    }

    const int clique_degree = matching ? k : 2 * k - 2;
    const int stable_degree = matching ? 1 : k - 1;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == clique_degree) out.clique.push_back(v);
        else if (d == stable_degree) out.stable.push_back(v);
        else return std::nullopt;
    }
    if (static_cast<int>(out.clique.size()) != k) return std::nullopt;
    if (!induces_clique(g, out.clique) || !induces_stable(g, out.stable)) return std::nullopt;

    std::vector<bool> paired(n, false);
    std::vector<std::pair<int, int>> pairs;
    for (int s : out.stable) {
        int partner = -1;
        for (int c : out.clique) {
            const bool edge = g.has_edge(c, s);
            if (edge == matching) {
                if (partner != -1) return std::nullopt;
                partner = c;
            }
        }
        if (partner == -1 || paired[partner]) return std::nullopt;
        paired[partner] = true;
        pairs.emplace_back(partner, s);
    }
    std::sort(pairs.begin(), pairs.end());
    out.pairs = std::move(pairs);
    return out;
}

}  // namespace

std::optional<SplitPairing> recognize_split_matching(const Graph& g) {
    return recognize_cross_structure(g, true);
}

std::optional<SplitPairing> recognize_split_antimatching(const Graph& g) {
    return recognize_cross_structure(g, false);
}

// ---- composition ----

Graph compose(const Graph& g1, const SplitPartition& p1, const Graph& g2) {
    validate_partition(g1, p1);
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    Graph out(n1 + n2);
    for (const auto& [u, v] : g1.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : g2.edges()) out.add_edge(n1 + u, n1 + v);
    for (int c : p1.clique)
        for (int v = 0; v < n2; ++v) out.add_edge(c, n1 + v);
    return out;
}

void MatrogenicSpec::validate() const {
    if (components.empty()) throw Error("matrogenic spec must have at least one component");
    for (const auto& c : components) {
        if (c.size < 1) throw Error("matrogenic component size must be >= 1");
        if (c.kind == SplitKind::other)
            throw UnsupportedComponentError("matrogenic component kind must be "
                                            "matching, antimatching, clique or stable");
    }
}

std::vector<int> ComponentSpan::clique_vertices() const {
    std::vector<int> out(clique_count);
    std::iota(out.begin(), out.end(), clique_first);
    return out;
}

std::vector<int> ComponentSpan::stable_vertices() const {
    std::vector<int> out(stable_count);
    std::iota(out.begin(), out.end(), stable_first);
    return out;
}

Graph component_graph(SplitKind kind, int size) {
    if (size < 1) throw Error("component size must be >= 1");
    switch (kind) {
        case SplitKind::clique:
            return complete_graph(size);
        case SplitKind::stable:
            return Graph(size);
        case SplitKind::matching:
            return split_matching(size);
        case SplitKind::antimatching:
            return split_antimatching(size);
        case SplitKind::other:
            break;
    }
    throw UnsupportedComponentError("no component graph for kind 'other'");
}

MatrogenicBuild build_matrogenic(const MatrogenicSpec& spec) {
    spec.validate();
    MatrogenicBuild build;
    SplitPartition accumulated;  // split structure of the fold so far
    bool first = true;
    for (const auto& comp : spec.components) {
        const Graph piece = component_graph(comp.kind, comp.size);
        const int offset = build.graph.vertex_count();

        ComponentSpan span;
        span.kind = comp.kind;
        const int k = comp.kind == SplitKind::stable ? 0 : comp.size;
        const int s = comp.kind == SplitKind::clique ? 0 : comp.size;
        span.clique_first = offset;
        span.clique_count = k;
        span.stable_first = offset + k;
        span.stable_count = s;
        build.components.push_back(span);

        if (first) {
            build.graph = piece;
            first = false;
        } else {
            build.graph = compose(build.graph, accumulated, piece);
        }
        for (int i = 0; i < k; ++i) accumulated.clique.push_back(offset + i);
        for (int i = 0; i < s; ++i) accumulated.stable.push_back(offset + k + i);
    }
    return build;
}

// ---- generators ----

Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw Error("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw Error("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph threshold_graph(const std::vector<bool>& joins) {
    Graph g(static_cast<int>(joins.size()) + 1);
    int built = 1;
    for (const bool join : joins) {
        if (join)
            for (int u = 0; u < built; ++u) g.add_edge(built, u);
        ++built;
    }
    return g;
}

Graph random_threshold(int n, std::uint64_t seed) {
    if (n < 1) throw Error("random_threshold needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<bool> joins(n - 1);
    for (std::size_t i = 0; i < joins.size(); ++i) joins[i] = (rng() & 1) != 0;
    if (!joins.empty()) joins.back() = true;  // keep the graph connected
    return threshold_graph(joins);
}

Graph split_matching(int k) {
    if (k < 1) throw Error("split_matching needs k >= 1");
    Graph g(2 * k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    for (int i = 0; i < k; ++i) g.add_edge(i, k + i);
    return g;
}

Graph split_antimatching(int k) {
    if (k < 1) throw Error("split_antimatching needs k >= 1");
    Graph g(2 * k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) g.add_edge(i, k + j);
    return g;
}

// ---- induced cycles ----

namespace {

// Walks the subset as a cycle starting from its smallest vertex; assumes
// every subset vertex has exactly two subset neighbors.
std::vector<int> cycle_order(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> order;
    order.reserve(verts.size());
    const int start = verts.front();
    int prev = -1, cur = start;
    do {
        order.push_back(cur);
        int next = -1;
        for (int u : verts) {
            if (u != prev && u != cur && g.has_edge(cur, u)) {
                if (next == -1 || u < next) next = u;
            }
        }
        prev = cur;
        cur = next;
    } while (cur != start && cur != -1);
    return order;
}

}  // namespace

std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g, int min_len) {
    const int n = g.vertex_count();
    if (min_len < 3) min_len = 3;
    if (n < min_len) return std::nullopt;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) < min_len) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint64_t{1} << v)) verts.push_back(v);
        bool is_cycle = true;
        for (int v : verts) {
            int deg = 0;
            for (int u : verts)
                if (u != v && g.has_edge(u, v)) ++deg;
            if (deg != 2) { is_cycle = false; break; }
        }
        if (!is_cycle) continue;
        // degree-2 everywhere means a disjoint union of cycles; connectedness
        // makes it a single one
        if (!g.induced_subgraph(verts).is_connected()) continue;
        return cycle_order(g, verts);
    }
    return std::nullopt;
}

// ---- edge-list text format ----

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (!have_header) {
            if (tag != "n") throw ParseError("expected 'n <count>' header", line_no);
            if (!(ls >> n) || n < 0) throw ParseError("bad vertex count", line_no);
            have_header = true;
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("bad edge line", line_no);
            if (u < 0 || u >= n || v < 0 || v >= n || u == v)
                throw ParseError("edge endpoints out of range", line_no);
            edges.emplace_back(u, v);
        } else {
            throw ParseError("unknown line tag '" + tag + "'", line_no);
        }
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens", line_no);
    }
    if (!have_header) throw ParseError("missing 'n <count>' header", line_no);
    return Graph::from_edges(n, edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

}  // namespace pcg
