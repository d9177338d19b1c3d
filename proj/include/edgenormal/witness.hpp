#pragma once

#include <string>
#include <vector>

#include "edgenormal/covers.hpp"
#include "edgenormal/graph.hpp"

namespace edgenormal {

// Clique in the line graph: all edges incident to one cover vertex.
struct StarClique {
    int center = -1;
    std::vector<int> line_vertices;  // edge indices, sorted

    friend bool operator==(const StarClique&, const StarClique&) = default;
};

// Clique cover (stars of cover vertices) and stable-set cover (matchings) of
// the line graph.  Every clique meets every stable set.
struct NormalityWitness {
    std::vector<StarClique> cliques;
    std::vector<std::vector<int>> stables;  // sets of edge indices, each sorted

    friend bool operator==(const NormalityWitness&, const NormalityWitness&) = default;
};

struct NormalityCertificate {
    Graph graph;
    VertexSet cover;
    std::vector<Matching> matchings;  // parallel to graph.edges(); i-th contains edge i
    NormalityWitness witness;
};

// Cliques: one star per cover vertex, ascending centers.  Stables: the
// matchings as edge-index sets, sorted and deduplicated.
NormalityWitness to_normality_witness(const Graph& g, const VertexSet& cover,
                                      const std::vector<Matching>& matchings);

struct VerifyResult {
    bool ok = false;
    std::string report;  // empty when ok; names the first failure otherwise

    explicit operator bool() const { return ok; }
};

// Checks the normality properties against the line graph: every listed clique
// is a clique, every stable set is stable, both families cover all vertices,
// and every clique meets every stable set.
VerifyResult verify_witness(const LineGraphMap& lg, const NormalityWitness& w);

// Recomputes nothing from scratch: checks that the certificate's parts fit
// together (cover covers, matchings contain their edge and the cover, witness
// equals the one derived from them) and that the witness verifies.
VerifyResult verify_certificate(const NormalityCertificate& cert);

// Full pipeline: good cover plus one covering matching per edge, then the
// witness.  Requires a connected graph with all degrees 1 or 3 and at least
// one edge.
NormalityCertificate build_certificate(const Graph& g);

// JSON round-trip.  Layout: graph (graph6), cover, matchings, cliques,
// stables, format_version.
std::string certificate_to_json_string(const NormalityCertificate& cert, int indent = 2);
// Throws ParseError on malformed or inconsistent input.
NormalityCertificate certificate_from_json_string(const std::string& text);

}  // namespace edgenormal
