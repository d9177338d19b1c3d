#include "edgenormal/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace edgenormal {

Edge::Edge(int a, int b) {
    if (a == b) throw std::invalid_argument("edge: loop at vertex " + std::to_string(a));
    u = std::min(a, b);
    v = std::max(a, b);
}

bool contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("graph: vertex id out of range in edge " +
                                        std::to_string(e.u) + " " + std::to_string(e.v));
        if (e.u == e.v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(e.u));
        if (i > 0 && edges_[i - 1] == e)
            throw std::invalid_argument("graph: duplicate edge " + std::to_string(e.u) + " " +
                                        std::to_string(e.v));
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex id out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

bool Graph::is_cubic() const {
    if (n_ == 0) return false;
    for (int v = 0; v < n_; ++v)
        if (degree(v) != 3) return false;
    return true;
}

bool Graph::degrees_one_or_three() const {
    if (n_ == 0) return false;
    for (int v = 0; v < n_; ++v) {
        int d = degree(v);
        if (d != 1 && d != 3) return false;
    }
    return true;
}

bool is_matching(const std::vector<Edge>& es) {
    std::vector<int> ends;
    for (const Edge& e : es) {
        ends.push_back(e.u);
        ends.push_back(e.v);
    }
    std::sort(ends.begin(), ends.end());
    return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

Matching Matching::from_edges(std::vector<Edge> es) {
    std::sort(es.begin(), es.end());
    if (!is_matching(es)) throw std::invalid_argument("matching: edges share an endpoint");
    return Matching{std::move(es)};
}

bool Matching::covers_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

VertexSet Matching::endpoint_set() const {
    std::vector<int> out;
    for (const Edge& e : edges) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    return sorted_unique(std::move(out));
}

int LineGraphMap::vertex_of_edge(const Edge& e) const {
    auto it = std::lower_bound(edge_of_vertex.begin(), edge_of_vertex.end(), e);
    if (it == edge_of_vertex.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edge_of_vertex.begin());
}

LineGraphMap line_graph(const Graph& g) {
    if (g.m() == 0) throw std::invalid_argument("line_graph: graph has no edges");
    const auto& es = g.edges();
    // For every vertex, the indices of its incident edges; any two of those
    // indices are adjacent in L(G).
    std::vector<std::vector<int>> at(g.n());
    for (int i = 0; i < g.m(); ++i) {
        at[es[i].u].push_back(i);
        at[es[i].v].push_back(i);
    }
    std::vector<Edge> le;
    for (int v = 0; v < g.n(); ++v)
        for (std::size_t i = 0; i < at[v].size(); ++i)
            for (std::size_t j = i + 1; j < at[v].size(); ++j)
                le.emplace_back(at[v][i], at[v][j]);
    // Two edges share at most one vertex, so no pair is emitted twice.
    return LineGraphMap{Graph(g.m(), std::move(le)), es};
}

namespace {

std::vector<VertexSet> components_impl(const Graph& g, const Edge* skip) {
    std::vector<char> seen(g.n(), 0);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (skip && Edge(v, w) == *skip) continue;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_impl(g, nullptr);
}

VertexSet component_after_deleting_edge(const Graph& g, const Edge& cut, int v) {
    for (const VertexSet& c : components_impl(g, &cut))
        if (contains(c, v)) return c;
    throw std::invalid_argument("component_after_deleting_edge: vertex out of range");
}

std::vector<Edge> bridges(const Graph& g) {
    // Iterative DFS with low links; an edge (parent, child) is a bridge when
    // low[child] > disc[parent].
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), it(n, 0);
    std::vector<Edge> out;
    int timer = 0;
    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        std::vector<int> stack = {s};
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            int v = stack.back();
            const auto& nb = g.neighbors(v);
            if (it[v] < static_cast<int>(nb.size())) {
                int w = nb[it[v]++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back();
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) out.emplace_back(p, v);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph complement(const Graph& g) {
    std::vector<Edge> es;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!g.has_edge(i, j)) es.emplace_back(i, j);
    return Graph(g.n(), std::move(es));
}

namespace {

using Mask = std::uint64_t;

// Grows an independent set over the candidate vertices in ascending order;
// a branch is emitted when no candidate is left and no excluded vertex could
// still extend the set.
void mis_rec(const std::vector<Mask>& nbr, Mask chosen, Mask candidates, Mask excluded,
             std::vector<Mask>& out) {
    if (candidates == 0) {
        if (excluded == 0) out.push_back(chosen);
        return;
    }
    int v = std::countr_zero(candidates);
    Mask bit = Mask{1} << v;
    mis_rec(nbr, chosen | bit, candidates & ~(nbr[v] | bit), excluded & ~nbr[v], out);
    // Skipping v is fruitful only if some chosen-later vertex dominates it.
    mis_rec(nbr, chosen, candidates & ~bit, excluded | bit, out);
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g, const VertexSet& seed) {
    if (g.n() > 64)
        throw std::invalid_argument("maximal_independent_sets: more than 64 vertices");
    std::vector<Mask> nbr(g.n(), 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= Mask{1} << e.v;
        nbr[e.v] |= Mask{1} << e.u;
    }
    Mask chosen = 0;
    for (int v : seed) {
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("maximal_independent_sets: seed vertex out of range");
        chosen |= Mask{1} << v;
    }
    Mask blocked = 0;
    for (int v : seed) {
        if (nbr[v] & chosen)
            throw std::invalid_argument("maximal_independent_sets: seed is not independent");
        blocked |= nbr[v];
    }
    Mask all = g.n() == 64 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
    std::vector<Mask> raw;
    mis_rec(nbr, chosen, all & ~chosen & ~blocked, 0, raw);

    std::vector<VertexSet> out;
    out.reserve(raw.size());
    for (Mask m : raw) {
        VertexSet s;
        for (int v = 0; v < g.n(); ++v)
            if (m & (Mask{1} << v)) s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

int InducedSubgraph::to_local(int host) const {
    auto it = std::lower_bound(to_host.begin(), to_host.end(), host);
    if (it == to_host.end() || *it != host) return -1;
    return static_cast<int>(it - to_host.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.to_host = s;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int w : g.neighbors(s[i])) {
            if (w <= s[i]) continue;
            int j = out.to_local(w);
            if (j != -1) es.emplace_back(static_cast<int>(i), j);
        }
    out.graph = Graph(static_cast<int>(s.size()), std::move(es));
    return out;
}

namespace {

bool try_augment(const BipartiteIncidence& b, int a, std::vector<char>& used,
                 std::vector<int>& right_of_left, std::vector<int>& left_of_right) {
    for (int x : b.adj[a]) {
        if (used[x]) continue;
        used[x] = 1;
        if (left_of_right[x] == -1 ||
            try_augment(b, left_of_right[x], used, right_of_left, left_of_right)) {
            right_of_left[a] = x;
            left_of_right[x] = a;
            return true;
        }
    }
    return false;
}

}  // namespace

BipartiteMatching max_bipartite_matching(const BipartiteIncidence& b) {
    BipartiteMatching m;
    m.right_of_left.assign(b.left_size, -1);
    m.left_of_right.assign(b.right_size, -1);
    for (int a = 0; a < b.left_size; ++a) {
        std::vector<char> used(b.right_size, 0);
        if (try_augment(b, a, used, m.right_of_left, m.left_of_right)) ++m.size;
    }
    return m;
}

std::optional<VertexSet> hall_violator(const BipartiteIncidence& b) {
    BipartiteMatching m = max_bipartite_matching(b);
    int root = -1;
    for (int a = 0; a < b.left_size; ++a)
        if (m.right_of_left[a] == -1) {
            root = a;
            break;
        }
    if (root == -1) return std::nullopt;
    // Alternating BFS: left -> right along any edge, right -> left along a
    // matched edge.  Every reached left vertex other than the root is matched,
    // so |X| = |N(X)| + 1.
    std::vector<char> seen_l(b.left_size, 0), seen_r(b.right_size, 0);
    seen_l[root] = 1;
    std::vector<int> queue = {root};
    VertexSet x = {root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int a = queue[qi];
        for (int r : b.adj[a]) {
            if (seen_r[r]) continue;
            seen_r[r] = 1;
            int a2 = m.left_of_right[r];
            if (a2 != -1 && !seen_l[a2]) {
                seen_l[a2] = 1;
                x.push_back(a2);
                queue.push_back(a2);
            }
        }
    }
    std::sort(x.begin(), x.end());
    return x;
}

}  // namespace edgenormal
