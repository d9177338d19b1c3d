#pragma once

// graph6 (McKay) and plain edge-list I/O.
//
// graph6: header byte(s) encode n (short form n <= 62, long form to 258047),
// then the upper triangle of the adjacency matrix in column order, packed
// MSB-first into 6-bit groups, each group printed as group+63.
//
// edgelist: first line "n m", then m lines "u v".

#include <stdexcept>
#include <string>

#include "edgenormal/graph.hpp"

namespace edgenormal {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

Graph parse_edgelist(const std::string& text);
std::string to_edgelist(const Graph& g);

enum class GraphFormat { graph6, edgelist };

Graph parse_graph(const std::string& text, GraphFormat format);

}  // namespace edgenormal
