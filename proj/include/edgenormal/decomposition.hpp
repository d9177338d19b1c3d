#pragma once

// Bridged cubic graphs: decomposition into cubic pieces with arms, cubic
// completion, good covers of the pieces, and the wrong-set diagnosis.
//
// A cubic graph with arms has a nonempty body of degree-3 vertices plus
// degree-1 arms hanging off the body.  Cutting every bridge between two
// degree-3 vertices splits a graph with degrees in {1,3} into pieces whose
// bodies are 2-edge-connected; each cut bridge leaves a stub arm on both
// sides.  A piece with arms is completed to a cubic graph by soldering a
// five-vertex gadget onto each arm; a good cover of the completion that
// avoids the gadgets' {c,d} pairs pulls back to a good cover of the piece,
// and piece covers merge into a good cover of the whole graph.

#include <optional>
#include <vector>

#include "edgenormal/covers.hpp"
#include "edgenormal/graph.hpp"

namespace edgenormal {

struct CubicWithArms {
    Graph graph;
    VertexSet body;  // degree-3 vertices
    VertexSet arms;  // degree-1 vertices
};

// Throws std::invalid_argument unless every degree is 1 or 3 and the body is
// nonempty.
CubicWithArms as_cubic_with_arms(const Graph& g);

// Glue two pieces: drop one arm of each and join the exposed body vertices
// by an edge.  Vertices of g1 except arm1 keep their relative order and come
// first.  The inverse of cutting a bridge.
CubicWithArms connect(const CubicWithArms& g1, int arm1, const CubicWithArms& g2, int arm2);

// The unique one-arm piece on a five-vertex body: K4 minus the edge {2,3},
// vertex 4 adjacent to 2 and 3, arm 5 at 4.  Its canonical good cover is
// {0, 1, 4}.
CubicWithArms gadget_piece();
VertexSet gadget_canonical_cover();

struct PieceLink {
    int piece_a = 0;
    int arm_a = 0;  // local stub arm in piece_a that stands for the far side
    int piece_b = 0;
    int arm_b = 0;
    Edge bridge;    // host edge
};

struct DecompositionTree {
    std::vector<CubicWithArms> pieces;
    std::vector<std::vector<int>> to_host;  // per piece: local id -> host id
    std::vector<PieceLink> links;
};

// Cuts every bridge with two degree-3 endpoints.  Requires a connected graph
// with degrees in {1,3} whose pieces are nonempty-bodied (a single edge is
// rejected).
DecompositionTree decompose(const Graph& g);

struct CompletionGadget {
    int arm_local = 0;     // piece arm this gadget replaces
    int attach_local = 0;  // body neighbor of that arm
    int attach = 0;        // completion id of attach_local
    int a = 0, b = 0, c = 0, d = 0, apex = 0;  // completion ids
};

struct Completion {
    Graph graph;
    std::vector<int> body_to_completion;  // parallel to piece body
    std::vector<CompletionGadget> gadgets;  // parallel to piece arms
};

// Replaces each arm by a gadget whose apex takes over the arm edge; adds
// five vertices per arm.  The identity on armless pieces.
Completion cubic_completion(const CubicWithArms& piece);

// (cover of completion restricted to the body) plus every attach vertex.
// Requires completion_cover to be a vertex cover of comp.graph.
VertexSet pull_back_cover(const CubicWithArms& piece, const Completion& comp,
                          const VertexSet& completion_cover);

// Everything needed to answer per-edge queries inside one piece.
struct PiecePlan {
    VertexSet cover;             // piece-local good cover
    Completion comp;             // identity for armless pieces
    VertexSet completion_cover;  // empty for armless pieces
};

// Armless pieces take the deterministic minimal cover; pieces with arms get
// the canonical gadget-pattern cover of their completion (k = 1 chooses the
// seed stable set by the four-case analysis around the attach vertex), with
// an exhaustive gadget-pattern fallback should the primary pattern fail.
PiecePlan plan_piece(const CubicWithArms& piece);

// Matching inside the piece containing local_edge with the plan cover inside
// its endpoints; arm edges are answered through the completion bridge.
Matching piece_matching_for_edge(const CubicWithArms& piece, const PiecePlan& plan,
                                 const Edge& local_edge);

// plan_piece's cover, re-verified edge by edge within the piece.
VertexSet good_cover_piece(const CubicWithArms& piece);

// Union of per-piece covers in host coordinates.
VertexSet merge_covers(const DecompositionTree& tree,
                       const std::vector<VertexSet>& piece_covers);

// Good cover of any connected graph with degrees in {1,3}; handles the
// single-edge graph directly.
VertexSet good_vertex_cover(const Graph& g);

// Per-edge matching for the merged cover: solve the piece containing f, then
// walk the link tree, passing the bridge down when the local matching uses
// it and restarting at the far attach vertex otherwise.  cover must be the
// deterministic cover produced by good_vertex_cover for tree's host graph.
Matching matching_for_edge_bridged(const Graph& g, const VertexSet& cover,
                                   const DecompositionTree& tree, const Edge& f);

// Caches the per-piece plans so all edges of one graph can be answered
// without re-deriving the piece covers.
class BridgedSolver {
  public:
    explicit BridgedSolver(const Graph& g);

    const VertexSet& cover() const { return cover_; }
    const DecompositionTree& tree() const { return tree_; }
    Matching matching_for(const Edge& f) const;

  private:
    int local_of(int piece, int host) const;

    Graph g_;
    DecompositionTree tree_;
    std::vector<PiecePlan> plans_;
    std::vector<int> home_piece_;  // host vertex -> piece owning it
    VertexSet cover_;
};

enum class WrongSetType { type1, type2a, type2b };

// The certified obstruction of a not-good minimal cover: W is one side of a
// bridge, partitioned into Z (cover vertices from the unmatched odd
// components), Y (their bipartite neighborhood, disjoint from the cover) and
// the endpoints of the failing edge.
struct WrongSet {
    Edge failing_edge;  // e = {x,y}; the U of the partition
    VertexSet w_set;
    VertexSet z_set;
    VertexSet y_set;
    Edge cut_edge;      // the only edge leaving w_set
    int w_vertex = 0;   // endpoint of cut_edge inside w_set
    WrongSetType type = WrongSetType::type1;
    int x_count = 0;    // unmatched odd components behind the violator
    int delta_sum = 0, epsilon_sum = 0, double_count = 0, triple_count = 0;
};

// nullopt iff the cover is good.  Otherwise derives the wrong set from the
// first failing edge and its Hall violator, checking every claimed invariant
// on the way (std::logic_error on any miss).
std::optional<WrongSet> find_wrong_set(const Graph& g, const VertexSet& cover);

// Indices (1..4) of the forbidden configurations present around ws:
// 1  w in C with no cover neighbor inside W,
// 2  a P2 component of G[C] inside W avoiding w,
// 3  a P4 component of G[C meet W],
// 4  a P5 component of G[C meet W] with endpoint w.
// Empty for every wrong set produced by find_wrong_set.
std::vector<int> check_technical_exclusions(const Graph& g, const VertexSet& cover,
                                            const WrongSet& ws);

}  // namespace edgenormal
