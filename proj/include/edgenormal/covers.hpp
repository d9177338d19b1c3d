#pragma once

// Vertex covers of cubic graphs and the per-edge matching machinery.
//
// For a minimal cover C of a cubic graph, the induced graph on C has maximum
// degree 2, so its components are isolated vertices, paths and cycles.  A
// cover C is good when every edge e = {x,y} extends to a matching S with
// e in S and C inside the endpoints of S.  Building S reduces to finding a
// "nice" matching for C' = C minus {x,y} in G minus {x,y}: one edge per odd
// component H of G[C'], leaving H at an important vertex and landing outside
// C', and that reduces to a bipartite matching in the auxiliary graph F_e.

#include <optional>
#include <vector>

#include "edgenormal/graph.hpp"

namespace edgenormal {

enum class ShapeKind { isolated_vertex, path, cycle };

struct ComponentShape {
    ShapeKind kind = ShapeKind::isolated_vertex;
    // Walk order: paths start at the lower-id endpoint, cycles start at the
    // lowest vertex and turn toward its lower-id neighbor.
    std::vector<int> vertices;

    bool odd() const { return vertices.size() % 2 == 1; }
    // Important vertices of an odd component: the single vertex, every cycle
    // vertex, or the odd positions of a path (walk positions 0, 2, 4, ...).
    // Empty for even components.
    std::vector<int> important() const;
};

// Components of g[u]; requires every vertex of u to have at most two
// neighbors inside u.  Listed by smallest member.
std::vector<ComponentShape> classify_components(const Graph& g, const VertexSet& u);

// Number of host edges leaving an odd component from its important vertices
// when the host is cubic: 3 for an isolated vertex, 2k+1 for C_{2k+1},
// k+3 for P_{2k+1}.
int delta(const ComponentShape& shape);

bool is_vertex_cover(const Graph& g, const VertexSet& c);
bool is_minimal_vertex_cover(const Graph& g, const VertexSet& c);

// Complement of the greedily grown maximal independent set, hence a minimal
// cover; deterministic.
VertexSet greedy_cover(const Graph& g);

// Drops the lowest removable vertex until the cover is minimal.
VertexSet minimalize_cover(const Graph& g, VertexSet c);

// One edge per odd component of the relevant G[C'], in component order; each
// edge leaves its component at an important vertex and ends outside the set.
struct NiceMatching {
    std::vector<Edge> edges;
};

// The auxiliary bipartite graph for edge e = {x,y}: left side the odd
// components of G[C'] with C' = cover minus {x,y}, right side the vertices
// outside C' and e, adjacency through important vertices.
struct FeGraph {
    BipartiteIncidence incidence;
    std::vector<ComponentShape> odd_components;
    VertexSet outside;
};

FeGraph build_Fe(const Graph& g, const VertexSet& cover, const Edge& e);

// Nice matching for u inside an arbitrary host graph (per-component degree
// in u at most 2); nullopt when some family of odd components runs out of
// distinct exit vertices.
std::optional<NiceMatching> find_nice_matching(const Graph& host, const VertexSet& u);

// True when every edge admits a nice matching; cover must be minimal, g cubic.
bool is_good(const Graph& g, const VertexSet& cover);

// Extends {e} + nice to a matching whose endpoints swallow the whole cover,
// pairing the rest of each component along its walk.  Throws std::logic_error
// if the pieces do not fit, which a correct nice matching never triggers.
Matching complete_matching(const Graph& g, const VertexSet& cover, const Edge& e,
                           const NiceMatching& nice);

// The full pipeline for one edge of a good cover.
Matching matching_for_edge(const Graph& g, const VertexSet& cover, const Edge& e);

}  // namespace edgenormal
