#pragma once

// Simple undirected graphs on vertex ids 0..n-1, stored as sorted edge and
// adjacency lists.  No loops, no parallel edges.  Everything here is value
// semantics; functions never mutate their inputs.

#include <optional>
#include <string>
#include <vector>

namespace edgenormal {

// Endpoints are kept ordered, u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b);

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;

    bool touches(int x) const { return u == x || v == x; }
    // The endpoint that is not x; x must be an endpoint.
    int other(int x) const { return x == u ? v : u; }
};

// Sorted, duplicate-free vertex ids.  Used for covers, stable sets, bodies.
using VertexSet = std::vector<int>;

bool contains(const VertexSet& s, int v);
VertexSet sorted_unique(std::vector<int> v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

class Graph {
  public:
    Graph() = default;
    // Throws std::invalid_argument on loops, duplicate edges or ids
    // outside [0, n).
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
    // Position of e in edges(), which is sorted; -1 if absent.
    int edge_index(const Edge& e) const;

    bool is_connected() const;
    bool is_cubic() const;
    // Every degree is 1 or 3 (the shape the decomposition pipeline accepts).
    bool degrees_one_or_three() const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// A set of pairwise disjoint edges.  from_edges validates disjointness.
struct Matching {
    std::vector<Edge> edges;  // sorted

    static Matching from_edges(std::vector<Edge> es);
    bool covers_edge(const Edge& e) const;
    VertexSet endpoint_set() const;
};

bool is_matching(const std::vector<Edge>& es);

// Line graph L(G): one vertex per edge of G, in the order of G.edges().
struct LineGraphMap {
    Graph line;
    std::vector<Edge> edge_of_vertex;  // line vertex i -> edges()[i] of G

    int vertex_of_edge(const Edge& e) const;  // -1 if absent
};

// Requires at least one edge.
LineGraphMap line_graph(const Graph& g);

// Connected components, each sorted, listed by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Component of g - cut that contains v (cut is removed from the edge set).
VertexSet component_after_deleting_edge(const Graph& g, const Edge& cut, int v);

// All bridges of g, sorted.
std::vector<Edge> bridges(const Graph& g);

Graph complement(const Graph& g);

// All maximal independent sets that contain seed, by bitmask backtracking;
// requires n <= 64 and an independent seed.  Deterministic order.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, const VertexSet& seed = {});

// Induced subgraph on the sorted set s; local ids follow the order of s.
// to_host maps local -> host id.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;

    int to_local(int host) const;  // -1 if absent
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Bipartite graph given as left -> sorted right neighbor lists.
struct BipartiteIncidence {
    int left_size = 0;
    int right_size = 0;
    std::vector<std::vector<int>> adj;  // adj[a] = right ids, sorted
};

struct BipartiteMatching {
    std::vector<int> right_of_left;  // -1 when unmatched
    std::vector<int> left_of_right;
    int size = 0;
};

// Maximum matching by augmenting paths, deterministic (left ids ascending,
// neighbors in list order).
BipartiteMatching max_bipartite_matching(const BipartiteIncidence& b);

// A left set X with |N(X)| = |X| - 1, built from the alternating reachability
// tree of the lowest unmatched left vertex; nullopt when the matching covers
// the left side.
std::optional<VertexSet> hall_violator(const BipartiteIncidence& b);

}  // namespace edgenormal
