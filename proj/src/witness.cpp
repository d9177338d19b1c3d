#include "edgenormal/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "edgenormal/decomposition.hpp"
#include "edgenormal/graph6.hpp"
#include "json.hpp"

namespace edgenormal {

NormalityWitness to_normality_witness(const Graph& g, const VertexSet& cover,
                                      const std::vector<Matching>& matchings) {
    if (matchings.size() != static_cast<std::size_t>(g.m()))
        throw std::invalid_argument("to_normality_witness: one matching per edge expected");
    NormalityWitness w;
    for (int c : cover) {
        StarClique star;
        star.center = c;
        for (int i = 0; i < g.m(); ++i)
            if (g.edges()[i].touches(c)) star.line_vertices.push_back(i);
        w.cliques.push_back(std::move(star));
    }
    for (const Matching& m : matchings) {
        std::vector<int> ids;
        for (const Edge& e : m.edges) ids.push_back(g.edge_index(e));
        std::sort(ids.begin(), ids.end());
        w.stables.push_back(std::move(ids));
    }
    std::sort(w.stables.begin(), w.stables.end());
    w.stables.erase(std::unique(w.stables.begin(), w.stables.end()), w.stables.end());
    return w;
}

namespace {

bool valid_ids(const std::vector<int>& ids, int n) {
    for (int v : ids)
        if (v < 0 || v >= n) return false;
    return std::is_sorted(ids.begin(), ids.end()) &&
           std::adjacent_find(ids.begin(), ids.end()) == ids.end();
}

}  // namespace

VerifyResult verify_witness(const LineGraphMap& lg, const NormalityWitness& w) {
    int n = lg.line.n();
    auto fail = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };

    for (std::size_t i = 0; i < w.cliques.size(); ++i) {
        const auto& q = w.cliques[i].line_vertices;
        if (!valid_ids(q, n))
            return fail("clique " + std::to_string(i) + " has invalid line vertices");
        for (std::size_t a = 0; a < q.size(); ++a)
            for (std::size_t b = a + 1; b < q.size(); ++b)
                if (!lg.line.has_edge(q[a], q[b]))
                    return fail("clique " + std::to_string(i) + " is not a clique: " +
                                std::to_string(q[a]) + " and " + std::to_string(q[b]) +
                                " are not adjacent");
    }
    for (std::size_t i = 0; i < w.stables.size(); ++i) {
        const auto& s = w.stables[i];
        if (!valid_ids(s, n))
            return fail("stable set " + std::to_string(i) + " has invalid line vertices");
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (lg.line.has_edge(s[a], s[b]))
                    return fail("stable set " + std::to_string(i) + " is not stable: " +
                                std::to_string(s[a]) + " and " + std::to_string(s[b]) +
                                " are adjacent");
    }

    std::vector<char> covered(n, 0);
    for (const StarClique& q : w.cliques)
        for (int v : q.line_vertices) covered[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!covered[v])
            return fail("line vertex " + std::to_string(v) + " is in no clique");
    covered.assign(n, 0);
    for (const auto& s : w.stables)
        for (int v : s) covered[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!covered[v])
            return fail("line vertex " + std::to_string(v) + " is in no stable set");

    for (std::size_t i = 0; i < w.cliques.size(); ++i)
        for (std::size_t j = 0; j < w.stables.size(); ++j) {
            const auto& q = w.cliques[i].line_vertices;
            const auto& s = w.stables[j];
            std::vector<int> both;
            std::set_intersection(q.begin(), q.end(), s.begin(), s.end(),
                                  std::back_inserter(both));
            if (both.empty())
                return fail("clique " + std::to_string(i) + " and stable set " +
                            std::to_string(j) + " are disjoint");
        }
    return {true, {}};
}

VerifyResult verify_certificate(const NormalityCertificate& cert) {
    const Graph& g = cert.graph;
    auto fail = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };

    if (g.m() == 0) return fail("graph has no edges");
    if (!g.is_connected()) return fail("graph is not connected");
    if (!g.degrees_one_or_three()) return fail("graph has a degree other than 1 or 3");
    for (int c : cert.cover)
        if (c < 0 || c >= g.n()) return fail("cover vertex out of range");
    for (const Matching& m : cert.matchings)
        for (const Edge& e : m.edges)
            if (e.u < 0 || e.v >= g.n()) return fail("matching vertex out of range");
    if (!is_vertex_cover(g, cert.cover)) return fail("cover misses an edge");

    if (cert.matchings.size() != static_cast<std::size_t>(g.m()))
        return fail("expected one matching per edge");
    for (int i = 0; i < g.m(); ++i) {
        const Matching& m = cert.matchings[i];
        if (!is_matching(m.edges))
            return fail("matching " + std::to_string(i) +
                        " fails disjointness: edges share an endpoint");
        for (const Edge& e : m.edges)
            if (!g.has_edge(e))
                return fail("matching " + std::to_string(i) + " uses a non-edge");
        if (!m.covers_edge(g.edges()[i]))
            return fail("matching " + std::to_string(i) + " does not contain its edge");
        VertexSet ends = m.endpoint_set();
        for (int c : cert.cover)
            if (!contains(ends, c))
                return fail("matching " + std::to_string(i) + " misses cover vertex " +
                            std::to_string(c));
    }

    if (cert.witness != to_normality_witness(g, cert.cover, cert.matchings))
        return fail("witness does not match the cover and matchings");
    return verify_witness(line_graph(g), cert.witness);
}

NormalityCertificate build_certificate(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("build_certificate: graph is not connected");
    if (!g.degrees_one_or_three())
        throw std::invalid_argument("build_certificate: degrees must be 1 or 3");
    if (g.m() == 0) throw std::invalid_argument("build_certificate: graph has no edges");

    NormalityCertificate cert;
    cert.graph = g;
    if (g.n() == 2) {
        cert.cover = {0};
        cert.matchings = {Matching::from_edges({Edge(0, 1)})};
    } else {
        BridgedSolver solver(g);
        cert.cover = solver.cover();
        for (const Edge& e : g.edges()) cert.matchings.push_back(solver.matching_for(e));
    }
    cert.witness = to_normality_witness(g, cert.cover, cert.matchings);
    return cert;
}

namespace {

using nlohmann::ordered_json;

std::vector<int> int_list(const ordered_json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError(std::string(what) + ": expected integers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

std::string certificate_to_json_string(const NormalityCertificate& cert, int indent) {
    ordered_json j;
    j["graph"] = to_graph6(cert.graph);
    j["cover"] = cert.cover;
    ordered_json ms = ordered_json::array();
    for (const Matching& m : cert.matchings) {
        ordered_json pairs = ordered_json::array();
        for (const Edge& e : m.edges) pairs.push_back({e.u, e.v});
        ms.push_back(std::move(pairs));
    }
    j["matchings"] = std::move(ms);
    ordered_json qs = ordered_json::array();
    for (const StarClique& q : cert.witness.cliques)
        qs.push_back({{"center", q.center}, {"line_vertices", q.line_vertices}});
    j["cliques"] = std::move(qs);
    j["stables"] = cert.witness.stables;
    j["format_version"] = 1;
    return j.dump(indent) + "\n";
}

NormalityCertificate certificate_from_json_string(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("certificate: expected an object");
    for (const char* key : {"graph", "cover", "matchings", "cliques", "stables",
                            "format_version"})
        if (!j.contains(key)) throw ParseError(std::string("certificate: missing ") + key);
    if (!j["format_version"].is_number_integer() || j["format_version"].get<int>() != 1)
        throw ParseError("certificate: unsupported format_version");

    NormalityCertificate cert;
    if (!j["graph"].is_string()) throw ParseError("certificate: graph must be a string");
    cert.graph = parse_graph6(j["graph"].get<std::string>());
    cert.cover = int_list(j["cover"], "cover");
    if (!std::is_sorted(cert.cover.begin(), cert.cover.end()))
        throw ParseError("cover: expected sorted vertex ids");

    if (!j["matchings"].is_array()) throw ParseError("matchings: expected an array");
    for (const auto& jm : j["matchings"]) {
        if (!jm.is_array()) throw ParseError("matchings: expected arrays of pairs");
        std::vector<Edge> es;
        for (const auto& jp : jm) {
            std::vector<int> pair = int_list(jp, "matchings");
            if (pair.size() != 2) throw ParseError("matchings: expected [u, v] pairs");
            if (pair[0] < 0 || pair[1] < 0 || pair[0] >= cert.graph.n() ||
                pair[1] >= cert.graph.n() || pair[0] == pair[1])
                throw ParseError("matchings: invalid vertex pair");
            es.emplace_back(pair[0], pair[1]);
        }
        // Shape checks only; semantic defects (overlapping edges, non-edges)
        // are the verifier's to report.
        std::sort(es.begin(), es.end());
        cert.matchings.push_back(Matching{std::move(es)});
    }

    if (!j["cliques"].is_array()) throw ParseError("cliques: expected an array");
    for (const auto& jq : j["cliques"]) {
        if (!jq.is_object() || !jq.contains("center") || !jq.contains("line_vertices") ||
            !jq["center"].is_number_integer())
            throw ParseError("cliques: expected {center, line_vertices}");
        StarClique q;
        q.center = jq["center"].get<int>();
        q.line_vertices = int_list(jq["line_vertices"], "cliques");
        cert.witness.cliques.push_back(std::move(q));
    }
    if (!j["stables"].is_array()) throw ParseError("stables: expected an array");
    for (const auto& js : j["stables"]) cert.witness.stables.push_back(int_list(js, "stables"));
    return cert;
}

}  // namespace edgenormal
