#pragma once

#include <string>
#include <vector>

#include "edgenormal/decomposition.hpp"
#include "edgenormal/graph.hpp"

namespace edgenormal {

// Brute-force deciders are exponential; budgets turn overruns into an
// explicit `unknown` instead of a wrong or never-returning answer.
struct SearchBudget {
    int max_vertices = 16;
    long long max_millis = 60000;
    long long node_limit = 50'000'000;
};

enum class Tristate { no, yes, unknown };

std::string to_string(Tristate t);

// Exact normality decision: searches clique coverings restricted to maximal
// cliques, keeping the stable-set side as the admissible maximal stable sets
// (those meeting every chosen clique).  Restricting both families to maximal
// sets loses nothing: enlarging a member preserves coverage and pairwise
// intersection.
Tristate brute_normal(const Graph& g, const SearchBudget& budget = {});

// brute_normal agrees on g and its complement.  Throws on budget exhaustion.
bool brute_normal_complement_consistency(const Graph& g, const SearchBudget& budget = {});

// Every edge extends to a matching whose endpoints include the cover.
// Exhaustive; exponential in |cover|.
bool brute_good(const Graph& g, const VertexSet& cover);

// Some minimal vertex cover of g is good.
Tristate brute_strongly_edge_normal(const Graph& g, const SearchBudget& budget = {});

// The line graph of g is normal.
Tristate brute_edge_normal(const Graph& g, const SearchBudget& budget = {});

// Complements of the maximal independent sets, sorted.  Throws above 16
// vertices.
std::vector<VertexSet> enumerate_minimal_covers(const Graph& g);

// All connected 3-regular graphs on n vertices, one per isomorphism class.
std::vector<Graph> enumerate_connected_cubic(int n);

// All connected graphs with body_size degree-3 vertices, one degree-1 arm,
// and a 2-edge-connected body, one per isomorphism class.
std::vector<CubicWithArms> enumerate_one_arm_pieces(int body_size);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace edgenormal
