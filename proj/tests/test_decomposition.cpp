#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "edgenormal/covers.hpp"
#include "edgenormal/decomposition.hpp"
#include "edgenormal/graph.hpp"
#include "edgenormal/named_graphs.hpp"
#include "edgenormal/oracle.hpp"

using namespace edgenormal;

namespace {

// Two-arm piece: K4 minus {2,3}, arms at 2 and 3.
CubicWithArms two_arm_piece() {
    return as_cubic_with_arms(Graph(6, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2),
                                        Edge(1, 3), Edge(2, 4), Edge(3, 5)}));
}

// Gadget - two_arm - gadget, 14 vertices, two bridges.
Graph three_piece_chain() {
    CubicWithArms left = connect(gadget_piece(), 5, two_arm_piece(), 4);
    REQUIRE(left.arms.size() == 1);
    CubicWithArms whole = connect(left, left.arms[0], gadget_piece(), 5);
    REQUIRE(whole.arms.empty());
    return whole.graph;
}

void check_solver_matchings(const Graph& g) {
    BridgedSolver solver(g);
    const VertexSet& cover = solver.cover();
    CHECK(is_vertex_cover(g, cover));
    for (const Edge& f : g.edges()) {
        Matching s = solver.matching_for(f);
        CHECK(s.covers_edge(f));
        CHECK(is_matching(s.edges));
        for (const Edge& e : s.edges) CHECK(g.has_edge(e));
        VertexSet ends = s.endpoint_set();
        CHECK(set_difference(cover, ends).empty());
    }
}

}  // namespace

TEST_CASE("as_cubic_with_arms") {
    CubicWithArms k4 = as_cubic_with_arms(named_graph("k4"));
    CHECK(k4.body == VertexSet{0, 1, 2, 3});
    CHECK(k4.arms.empty());

    CubicWithArms gadget = gadget_piece();
    CHECK(gadget.body == VertexSet{0, 1, 2, 3, 4});
    CHECK(gadget.arms == VertexSet{5});
    CHECK(gadget.graph.degrees_one_or_three());

    CHECK_THROWS_AS(as_cubic_with_arms(named_graph("triangle")), std::invalid_argument);
    CHECK_THROWS_AS(as_cubic_with_arms(path_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(as_cubic_with_arms(path_graph(3)), std::invalid_argument);
}

TEST_CASE("connect rebuilds the completion pair") {
    CubicWithArms pair = connect(gadget_piece(), 5, gadget_piece(), 5);
    CHECK(pair.arms.empty());
    CHECK(pair.graph.n() == 10);
    CHECK(pair.graph.edges() == gadget_completion_pair().edges());

    CHECK_THROWS_AS(connect(gadget_piece(), 4, gadget_piece(), 5), std::invalid_argument);
}

TEST_CASE("connect arm bookkeeping") {
    CubicWithArms joined = connect(gadget_piece(), 5, two_arm_piece(), 4);
    CHECK(joined.graph.n() == 10);
    CHECK(joined.arms.size() == 1);
    CHECK(joined.body.size() == 9);
    CHECK(joined.graph.degrees_one_or_three());
    // The new bridge joins the two attach vertices.
    CHECK(joined.graph.has_edge(4, 7));
}

TEST_CASE("decompose a bridgeless graph") {
    DecompositionTree tree = decompose(named_graph("petersen"));
    REQUIRE(tree.pieces.size() == 1);
    CHECK(tree.links.empty());
    CHECK(tree.pieces[0].arms.empty());
    CHECK(tree.pieces[0].graph.edges() == named_graph("petersen").edges());
}

TEST_CASE("decompose the completion pair") {
    Graph pair = gadget_completion_pair();
    DecompositionTree tree = decompose(pair);
    REQUIRE(tree.pieces.size() == 2);
    REQUIRE(tree.links.size() == 1);

    // Both pieces are the gadget, with the stub arm standing for the far side.
    for (int p = 0; p < 2; ++p) {
        CHECK(tree.pieces[static_cast<std::size_t>(p)].graph.edges() ==
              gadget_piece().graph.edges());
        CHECK(tree.pieces[static_cast<std::size_t>(p)].arms == VertexSet{5});
    }
    CHECK(tree.to_host[0] == std::vector<int>{0, 1, 2, 3, 4, 9});
    CHECK(tree.to_host[1] == std::vector<int>{5, 6, 7, 8, 9, 4});

    const PieceLink& link = tree.links[0];
    CHECK(link.piece_a == 0);
    CHECK(link.arm_a == 5);
    CHECK(link.piece_b == 1);
    CHECK(link.arm_b == 5);
    CHECK(link.bridge == Edge(4, 9));
}

TEST_CASE("decompose the three piece chain") {
    Graph chain = three_piece_chain();
    CHECK(chain.n() == 14);
    CHECK(chain.is_cubic());
    CHECK(bridges(chain).size() == 2);

    DecompositionTree tree = decompose(chain);
    CHECK(tree.pieces.size() == 3);
    CHECK(tree.links.size() == 2);

    // Piece-local edges map to host edges; each bridge shows up as an arm
    // edge on both sides, nothing else is duplicated.
    int edge_total = 0;
    for (std::size_t p = 0; p < tree.pieces.size(); ++p) {
        const Graph& pg = tree.pieces[p].graph;
        edge_total += pg.m();
        for (const Edge& e : pg.edges())
            CHECK(chain.has_edge(tree.to_host[p][static_cast<std::size_t>(e.u)],
                                 tree.to_host[p][static_cast<std::size_t>(e.v)]));
    }
    CHECK(edge_total == chain.m() + static_cast<int>(tree.links.size()));
    std::vector<Edge> cuts = bridges(chain);
    for (const PieceLink& link : tree.links)
        CHECK(std::binary_search(cuts.begin(), cuts.end(), link.bridge));
}

TEST_CASE("decompose and connect are mutually inverse") {
    // Body-internal piece edges mapped to host ids, plus the link bridges,
    // rebuild the host edge set exactly.
    for (const Graph& host :
         {named_graph("petersen"), named_graph("gadget_completion_pair"), three_piece_chain()}) {
        DecompositionTree tree = decompose(host);
        std::vector<Edge> rebuilt;
        for (std::size_t p = 0; p < tree.pieces.size(); ++p) {
            const CubicWithArms& piece = tree.pieces[p];
            const std::vector<int>& map = tree.to_host[p];
            for (const Edge& e : piece.graph.edges()) {
                if (contains(piece.arms, e.u) || contains(piece.arms, e.v)) continue;
                rebuilt.push_back(Edge(map[static_cast<std::size_t>(e.u)],
                                       map[static_cast<std::size_t>(e.v)]));
            }
        }
        for (const PieceLink& link : tree.links) rebuilt.push_back(link.bridge);
        std::sort(rebuilt.begin(), rebuilt.end());
        CHECK(rebuilt == host.edges());
    }
}

TEST_CASE("decompose rejects bad input") {
    CHECK_THROWS_AS(decompose(path_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(decompose(named_graph("triangle")), std::invalid_argument);
    CHECK_THROWS_AS(decompose(Graph(8, {Edge(0, 1), Edge(2, 3)})), std::invalid_argument);
}

TEST_CASE("cubic completion of the gadget is the pair") {
    Completion comp = cubic_completion(gadget_piece());
    CHECK(comp.graph.edges() == gadget_completion_pair().edges());
    CHECK(comp.body_to_completion == std::vector<int>{0, 1, 2, 3, 4});
    REQUIRE(comp.gadgets.size() == 1);
    const CompletionGadget& gad = comp.gadgets[0];
    CHECK(gad.arm_local == 5);
    CHECK(gad.attach_local == 4);
    CHECK(gad.attach == 4);
    CHECK(gad.a == 5);
    CHECK(gad.b == 6);
    CHECK(gad.c == 7);
    CHECK(gad.d == 8);
    CHECK(gad.apex == 9);
}

TEST_CASE("cubic completion general shape") {
    Completion two = cubic_completion(two_arm_piece());
    CHECK(two.graph.n() == 4 + 10);
    CHECK(two.graph.is_cubic());
    CHECK(two.graph.is_connected());
    CHECK(bridges(two.graph).size() == 2);
    CHECK(two.gadgets.size() == 2);

    Completion armless = cubic_completion(as_cubic_with_arms(named_graph("k4")));
    CHECK(armless.graph.edges() == named_graph("k4").edges());
    CHECK(armless.gadgets.empty());
    CHECK(armless.body_to_completion == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("pull_back_cover") {
    CubicWithArms gadget = gadget_piece();
    Completion comp = cubic_completion(gadget);
    CHECK(pull_back_cover(gadget, comp, {0, 1, 4, 5, 6, 9}) == gadget_canonical_cover());
    CHECK_THROWS_AS(pull_back_cover(gadget, comp, {0, 1}), std::invalid_argument);

    // Pulled-back covers stay inside the body; arms never enter a plan.
    std::vector<CubicWithArms> pieces = {gadget_piece(), two_arm_piece()};
    for (const CubicWithArms& piece : pieces) {
        PiecePlan plan = plan_piece(piece);
        CHECK(set_intersection(plan.cover, piece.arms).empty());
    }
}

TEST_CASE("plan_piece") {
    PiecePlan gadget_plan = plan_piece(gadget_piece());
    CHECK(gadget_plan.cover == gadget_canonical_cover());
    CHECK(gadget_plan.completion_cover == VertexSet{0, 1, 4, 5, 6, 9});

    CubicWithArms pet = as_cubic_with_arms(named_graph("petersen"));
    PiecePlan pet_plan = plan_piece(pet);
    CHECK(pet_plan.cover == greedy_cover(named_graph("petersen")));
    CHECK(pet_plan.completion_cover == pet_plan.cover);
}

TEST_CASE("piece_matching_for_edge") {
    for (const CubicWithArms& piece :
         {gadget_piece(), two_arm_piece(), as_cubic_with_arms(named_graph("k4"))}) {
        PiecePlan plan = plan_piece(piece);
        CHECK(is_vertex_cover(piece.graph, plan.cover));
        for (const Edge& e : piece.graph.edges()) {
            Matching s = piece_matching_for_edge(piece, plan, e);
            CHECK(s.covers_edge(e));
            CHECK(is_matching(s.edges));
            for (const Edge& f : s.edges) CHECK(piece.graph.has_edge(f));
            VertexSet ends = s.endpoint_set();
            CHECK(set_difference(plan.cover, ends).empty());
        }
    }
    PiecePlan plan = plan_piece(gadget_piece());
    CHECK_THROWS_AS(piece_matching_for_edge(gadget_piece(), plan, Edge(0, 4)),
                    std::invalid_argument);
}

TEST_CASE("good_cover_piece") {
    CHECK(good_cover_piece(gadget_piece()) == gadget_canonical_cover());
    VertexSet two = good_cover_piece(two_arm_piece());
    CHECK(is_vertex_cover(two_arm_piece().graph, two));
}

TEST_CASE("merge_covers") {
    DecompositionTree tree = decompose(gadget_completion_pair());
    VertexSet merged = merge_covers(tree, {gadget_canonical_cover(), gadget_canonical_cover()});
    CHECK(merged == VertexSet{0, 1, 4, 5, 6, 9});
    CHECK_THROWS_AS(merge_covers(tree, {gadget_canonical_cover()}), std::invalid_argument);
    CHECK_THROWS_AS(merge_covers(tree, {VertexSet{5}, gadget_canonical_cover()}),
                    std::invalid_argument);
}

TEST_CASE("good_vertex_cover") {
    Graph pair = gadget_completion_pair();
    VertexSet cover = good_vertex_cover(pair);
    CHECK(cover == VertexSet{0, 1, 4, 5, 6, 9});
    CHECK(is_minimal_vertex_cover(pair, cover));
    CHECK(is_good(pair, cover));

    CHECK(good_vertex_cover(path_graph(2)) == VertexSet{0});
    CHECK(good_vertex_cover(named_graph("petersen")) ==
          greedy_cover(named_graph("petersen")));

    Graph chain = three_piece_chain();
    VertexSet chain_cover = good_vertex_cover(chain);
    CHECK(is_minimal_vertex_cover(chain, chain_cover));
    CHECK(is_good(chain, chain_cover));

    CHECK_THROWS_AS(good_vertex_cover(named_graph("triangle")), std::invalid_argument);
    CHECK_THROWS_AS(good_vertex_cover(Graph(8, {Edge(0, 1), Edge(2, 3)})),
                    std::invalid_argument);
}

TEST_CASE("bridged matchings cover every edge") {
    check_solver_matchings(gadget_completion_pair());
    check_solver_matchings(three_piece_chain());
    check_solver_matchings(named_graph("k4"));
    check_solver_matchings(cubic_completion(two_arm_piece()).graph);
}

TEST_CASE("bridge handling cases") {
    Graph pair = gadget_completion_pair();
    BridgedSolver solver(pair);
    // A query at the bridge carries the bridge edge itself.
    CHECK(solver.matching_for(Edge(4, 9)).covers_edge(Edge(4, 9)));
    // A query whose local matching leaves the stub alone never crosses the
    // cut: each side is matched within itself, so disjointness across pieces
    // is automatic.
    Matching free = solver.matching_for(Edge(2, 4));
    for (const Edge& e : free.edges) CHECK(e != Edge(4, 9));
    // A query whose local matching grabs the stub passes the bridge down to
    // the far piece instead.
    CHECK(solver.matching_for(Edge(5, 6)).covers_edge(Edge(4, 9)));
    CHECK_THROWS_AS(solver.matching_for(Edge(2, 3)), std::invalid_argument);
}

TEST_CASE("matching_for_edge_bridged") {
    Graph pair = gadget_completion_pair();
    DecompositionTree tree = decompose(pair);
    VertexSet cover = good_vertex_cover(pair);
    BridgedSolver solver(pair);
    for (const Edge& f : {Edge(0, 1), Edge(4, 9), Edge(7, 9)})
        CHECK(matching_for_edge_bridged(pair, cover, tree, f).edges ==
              solver.matching_for(f).edges);

    VertexSet wrong = cover;
    wrong.push_back(2);
    std::sort(wrong.begin(), wrong.end());
    CHECK_THROWS_AS(matching_for_edge_bridged(pair, wrong, tree, Edge(0, 1)),
                    std::invalid_argument);
}

TEST_CASE("find_wrong_set on good covers") {
    Graph k4 = named_graph("k4");
    for (const VertexSet& c : enumerate_minimal_covers(k4))
        CHECK(!find_wrong_set(k4, c).has_value());
    Graph pair = gadget_completion_pair();
    CHECK(!find_wrong_set(pair, good_vertex_cover(pair)).has_value());

    CHECK_THROWS_AS(find_wrong_set(named_graph("triangle"), {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(find_wrong_set(k4, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("find_wrong_set on the pair's bad cover") {
    Graph pair = gadget_completion_pair();
    VertexSet bad = {0, 1, 4, 5, 7, 8};
    REQUIRE(is_minimal_vertex_cover(pair, bad));

    auto ws = find_wrong_set(pair, bad);
    REQUIRE(ws.has_value());
    CHECK(ws->failing_edge == Edge(5, 6));
    CHECK(ws->type == WrongSetType::type2a);
    CHECK(ws->z_set == VertexSet{7, 8});
    CHECK(ws->y_set == VertexSet{9});
    CHECK(ws->w_set == VertexSet{5, 6, 7, 8, 9});
    CHECK(ws->cut_edge == Edge(4, 9));
    CHECK(ws->w_vertex == 9);
    CHECK(ws->x_count == 2);
    CHECK(ws->delta_sum == 6);
    CHECK(ws->epsilon_sum == 4);
    CHECK(ws->double_count == 0);
    CHECK(ws->triple_count == 0);

    CHECK(check_technical_exclusions(pair, bad, *ws).empty());
}

TEST_CASE("find_wrong_set agrees with is_good") {
    for (const Graph& g :
         {gadget_completion_pair(), named_graph("prism"), named_graph("k33")}) {
        for (const VertexSet& c : enumerate_minimal_covers(g)) {
            bool good = is_good(g, c);
            auto ws = find_wrong_set(g, c);
            CHECK(good == !ws.has_value());
            if (ws) CHECK(check_technical_exclusions(g, c, *ws).empty());
        }
    }
}

TEST_CASE("check_technical_exclusions flags synthetic configurations") {
    // Each scenario builds a fake wrong set around a hand-picked W and w; only
    // w_set and w_vertex matter to the checker.
    WrongSet ws;

    // 1: w is a cover vertex with no cover neighbor inside W.
    ws.w_set = {1};
    ws.w_vertex = 1;
    CHECK(check_technical_exclusions(path_graph(3), {1}, ws) == std::vector<int>{1});

    // 2: a P2 component of the induced cover graph inside W, avoiding w.
    ws.w_set = {0, 1, 2, 3};
    ws.w_vertex = 0;
    CHECK(check_technical_exclusions(path_graph(5), {1, 2}, ws) == std::vector<int>{2});

    // 3: a P4 component of the cover restricted to W.
    ws.w_set = {0, 1, 2, 3};
    ws.w_vertex = 0;
    CHECK(check_technical_exclusions(cycle_graph(6), {0, 1, 2, 3}, ws) ==
          std::vector<int>{3});

    // 4: a P5 component of the cover restricted to W with w at its end ...
    ws.w_set = {0, 1, 2, 3, 4};
    ws.w_vertex = 0;
    CHECK(check_technical_exclusions(cycle_graph(7), {0, 1, 2, 3, 4}, ws) ==
          std::vector<int>{4});

    // ... but not with w in its middle.
    ws.w_vertex = 2;
    CHECK(check_technical_exclusions(cycle_graph(7), {0, 1, 2, 3, 4}, ws).empty());
}
