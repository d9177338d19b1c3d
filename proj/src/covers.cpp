#include "edgenormal/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgenormal {

std::vector<int> ComponentShape::important() const {
    if (!odd()) return {};
    switch (kind) {
        case ShapeKind::isolated_vertex:
        case ShapeKind::cycle: return vertices;
        case ShapeKind::path: {
            std::vector<int> out;
            for (std::size_t i = 0; i < vertices.size(); i += 2) out.push_back(vertices[i]);
            return out;
        }
    }
    return {};
}

std::vector<ComponentShape> classify_components(const Graph& g, const VertexSet& u) {
    std::vector<std::vector<int>> inner(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (int w : g.neighbors(u[i]))
            if (contains(u, w)) inner[i].push_back(w);
        if (inner[i].size() > 2)
            throw std::invalid_argument("classify_components: induced degree exceeds 2");
    }
    auto local = [&](int host) {
        return static_cast<int>(std::lower_bound(u.begin(), u.end(), host) - u.begin());
    };

    std::vector<char> done(u.size(), 0);
    std::vector<ComponentShape> out;
    for (std::size_t s = 0; s < u.size(); ++s) {
        if (done[s]) continue;
        // Collect the component of u[s].
        std::vector<int> comp = {u[s]};
        done[s] = 1;
        for (std::size_t qi = 0; qi < comp.size(); ++qi)
            for (int w : inner[local(comp[qi])]) {
                int lw = local(w);
                if (!done[lw]) {
                    done[lw] = 1;
                    comp.push_back(w);
                }
            }
        std::sort(comp.begin(), comp.end());

        ComponentShape shape;
        if (comp.size() == 1) {
            shape.kind = ShapeKind::isolated_vertex;
            shape.vertices = comp;
            out.push_back(std::move(shape));
            continue;
        }
        std::vector<int> ends;
        for (int v : comp)
            if (inner[local(v)].size() == 1) ends.push_back(v);
        int start, prev = -1;
        if (ends.empty()) {
            shape.kind = ShapeKind::cycle;
            start = comp[0];
        } else {
            shape.kind = ShapeKind::path;
            start = *std::min_element(ends.begin(), ends.end());
        }
        int v = start;
        shape.vertices.push_back(v);
        while (shape.vertices.size() < comp.size()) {
            const auto& nb = inner[local(v)];
            int next = -1;
            for (int w : nb)
                if (w != prev && (shape.kind == ShapeKind::path || w != start ||
                                  shape.vertices.size() == comp.size()))
                    next = next == -1 ? w : std::min(next, w);
            prev = v;
            v = next;
            shape.vertices.push_back(v);
        }
        out.push_back(std::move(shape));
    }
    return out;
}

int delta(const ComponentShape& shape) {
    if (!shape.odd()) throw std::invalid_argument("delta: shape is even");
    int size = static_cast<int>(shape.vertices.size());
    switch (shape.kind) {
        case ShapeKind::isolated_vertex: return 3;
        case ShapeKind::cycle: return size;
        case ShapeKind::path: return (size - 1) / 2 + 3;
    }
    throw std::invalid_argument("delta: bad shape");
}

bool is_vertex_cover(const Graph& g, const VertexSet& c) {
    for (const Edge& e : g.edges())
        if (!contains(c, e.u) && !contains(c, e.v)) return false;
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, const VertexSet& c) {
    if (!is_vertex_cover(g, c)) return false;
    for (int v : c) {
        // v is removable iff it has no private edge.
        bool removable = true;
        for (int w : g.neighbors(v))
            if (!contains(c, w)) {
                removable = false;
                break;
            }
        if (removable) return false;
    }
    return true;
}

VertexSet greedy_cover(const Graph& g) {
    std::vector<char> blocked(g.n(), 0), in_set(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (blocked[v]) continue;
        in_set[v] = 1;
        for (int w : g.neighbors(v)) blocked[w] = 1;
    }
    VertexSet cover;
    for (int v = 0; v < g.n(); ++v)
        if (!in_set[v]) cover.push_back(v);
    return cover;
}

VertexSet minimalize_cover(const Graph& g, VertexSet c) {
    if (!is_vertex_cover(g, c)) throw std::invalid_argument("minimalize_cover: not a cover");
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            bool removable = true;
            for (int w : g.neighbors(c[i]))
                if (!contains(c, w)) {
                    removable = false;
                    break;
                }
            if (removable) {
                c.erase(c.begin() + i);
                changed = true;
                break;
            }
        }
    }
    return c;
}

FeGraph build_Fe(const Graph& g, const VertexSet& cover, const Edge& e) {
    VertexSet ends = {e.u, e.v};
    std::sort(ends.begin(), ends.end());
    VertexSet cprime = set_difference(cover, ends);

    FeGraph fe;
    for (ComponentShape& s : classify_components(g, cprime))
        if (s.odd()) fe.odd_components.push_back(std::move(s));
    for (int v = 0; v < g.n(); ++v)
        if (!contains(ends, v) && !contains(cprime, v)) fe.outside.push_back(v);

    fe.incidence.left_size = static_cast<int>(fe.odd_components.size());
    fe.incidence.right_size = static_cast<int>(fe.outside.size());
    fe.incidence.adj.resize(fe.incidence.left_size);
    for (int a = 0; a < fe.incidence.left_size; ++a) {
        std::vector<int> hits;
        for (int z : fe.odd_components[a].important())
            for (int w : g.neighbors(z)) {
                auto it = std::lower_bound(fe.outside.begin(), fe.outside.end(), w);
                if (it != fe.outside.end() && *it == w)
                    hits.push_back(static_cast<int>(it - fe.outside.begin()));
            }
        fe.incidence.adj[a] = sorted_unique(std::move(hits));
    }
    return fe;
}

std::optional<NiceMatching> find_nice_matching(const Graph& host, const VertexSet& u) {
    std::vector<ComponentShape> odd;
    for (ComponentShape& s : classify_components(host, u))
        if (s.odd()) odd.push_back(std::move(s));

    VertexSet outside;
    for (int v = 0; v < host.n(); ++v)
        if (!contains(u, v)) outside.push_back(v);

    BipartiteIncidence inc;
    inc.left_size = static_cast<int>(odd.size());
    inc.right_size = static_cast<int>(outside.size());
    inc.adj.resize(inc.left_size);
    for (int a = 0; a < inc.left_size; ++a) {
        std::vector<int> hits;
        for (int z : odd[a].important())
            for (int w : host.neighbors(z))
                if (!contains(u, w))
                    hits.push_back(static_cast<int>(
                        std::lower_bound(outside.begin(), outside.end(), w) - outside.begin()));
        inc.adj[a] = sorted_unique(std::move(hits));
    }

    BipartiteMatching m = max_bipartite_matching(inc);
    if (m.size < inc.left_size) return std::nullopt;

    NiceMatching nice;
    for (int a = 0; a < inc.left_size; ++a) {
        int b = outside[m.right_of_left[a]];
        int z = -1;
        for (int cand : odd[a].important())
            if (host.has_edge(cand, b) && (z == -1 || cand < z)) z = cand;
        nice.edges.emplace_back(z, b);
    }
    return nice;
}

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::logic_error(msg);
}

}  // namespace

bool is_good(const Graph& g, const VertexSet& cover) {
    if (!g.is_cubic()) throw std::invalid_argument("is_good: graph is not cubic");
    if (!is_minimal_vertex_cover(g, cover))
        throw std::invalid_argument("is_good: cover is not a minimal vertex cover");
    for (const Edge& e : g.edges()) {
        FeGraph fe = build_Fe(g, cover, e);
        if (max_bipartite_matching(fe.incidence).size < fe.incidence.left_size) return false;
    }
    return true;
}

Matching complete_matching(const Graph& g, const VertexSet& cover, const Edge& e,
                           const NiceMatching& nice) {
    VertexSet ends = {std::min(e.u, e.v), std::max(e.u, e.v)};
    VertexSet cprime = set_difference(cover, ends);

    VertexSet hit;
    for (const Edge& ne : nice.edges) {
        require(g.has_edge(ne), "complete_matching: nice edge not in graph");
        require(!ne.touches(e.u) && !ne.touches(e.v), "complete_matching: nice edge meets e");
        hit.push_back(ne.u);
        hit.push_back(ne.v);
    }
    hit = sorted_unique(std::move(hit));
    require(hit.size() == 2 * nice.edges.size(), "complete_matching: nice edges collide");

    std::vector<Edge> out = {Edge(e.u, e.v)};
    out.insert(out.end(), nice.edges.begin(), nice.edges.end());

    std::size_t odd_seen = 0;
    for (const ComponentShape& shape : classify_components(g, cprime)) {
        const auto& vs = shape.vertices;
        std::vector<int> marks;
        for (int v : vs)
            if (contains(hit, v)) marks.push_back(static_cast<int>(
                std::find(vs.begin(), vs.end(), v) - vs.begin()));
        if (!shape.odd()) {
            require(marks.empty(), "complete_matching: nice edge enters an even component");
            for (std::size_t i = 0; i + 1 < vs.size(); i += 2) out.emplace_back(vs[i], vs[i + 1]);
            continue;
        }
        ++odd_seen;
        require(marks.size() == 1, "complete_matching: odd component not hit exactly once");
        int h = marks[0];
        switch (shape.kind) {
            case ShapeKind::isolated_vertex: break;
            case ShapeKind::cycle: {
                int L = static_cast<int>(vs.size());
                for (int i = 1; i + 1 < L; i += 2)
                    out.emplace_back(vs[(h + i) % L], vs[(h + i + 1) % L]);
                break;
            }
            case ShapeKind::path: {
                require(h % 2 == 0, "complete_matching: path hit at an unimportant vertex");
                for (int i = 0; i + 1 < h; i += 2) out.emplace_back(vs[i], vs[i + 1]);
                for (int i = h + 1; i + 1 < static_cast<int>(vs.size()); i += 2)
                    out.emplace_back(vs[i], vs[i + 1]);
                break;
            }
        }
    }
    require(odd_seen == nice.edges.size(), "complete_matching: nice matching size mismatch");

    require(is_matching(out), "complete_matching: result is not a matching");
    for (const Edge& oe : out) require(g.has_edge(oe), "complete_matching: edge not in graph");
    Matching k = Matching::from_edges(std::move(out));
    VertexSet covered = k.endpoint_set();
    for (int v : cover) require(contains(covered, v), "complete_matching: cover vertex missed");
    return k;
}

Matching matching_for_edge(const Graph& g, const VertexSet& cover, const Edge& e) {
    FeGraph fe = build_Fe(g, cover, e);
    BipartiteMatching m = max_bipartite_matching(fe.incidence);
    if (m.size < fe.incidence.left_size)
        throw std::invalid_argument("matching_for_edge: no nice matching for this edge");

    NiceMatching nice;
    for (int a = 0; a < fe.incidence.left_size; ++a) {
        int b = fe.outside[m.right_of_left[a]];
        int z = -1;
        for (int cand : fe.odd_components[a].important())
            if (g.has_edge(cand, b) && (z == -1 || cand < z)) z = cand;
        nice.edges.emplace_back(z, b);
    }
    return complete_matching(g, cover, e, nice);
}

}  // namespace edgenormal
