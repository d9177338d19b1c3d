#pragma once

// Fixed test corpus plus a seeded random cubic generator.

#include <cstdint>
#include <string>
#include <vector>

#include "edgenormal/graph.hpp"

namespace edgenormal {

// Parameter-free names: k4, k33, prism, cube, petersen, tietze, triangle.
// Parametrized builders below cover cycles, paths and flower snarks.
Graph named_graph(const std::string& name);

std::vector<std::string> named_graph_names();

Graph cycle_graph(int k);           // C_k, k >= 3
Graph path_graph(int k);            // P_k on k vertices, k >= 1
Graph flower_snark(int k);          // J_k, k odd >= 3, 4k vertices
Graph gadget_completion_pair();     // two one-arm gadgets joined by a bridge

// Uniform random cubic graph by the pairing model: pair up 3n half-edges,
// reject until simple and connected.  n even, n >= 4.  Deterministic in seed.
Graph random_cubic(int n, std::uint64_t seed);

}  // namespace edgenormal
