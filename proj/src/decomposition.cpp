#include "edgenormal/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgenormal {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::logic_error(msg);
}

// The unique neighbor of v other than a and b; v must have degree 3.
int third_neighbor(const Graph& g, int v, int a, int b) {
    int found = -1;
    for (int w : g.neighbors(v))
        if (w != a && w != b) {
            require(found == -1, "third_neighbor: vertex has two spare neighbors");
            found = w;
        }
    require(found != -1, "third_neighbor: no spare neighbor");
    return found;
}

}  // namespace

CubicWithArms as_cubic_with_arms(const Graph& g) {
    CubicWithArms out;
    out.graph = g;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == 3) out.body.push_back(v);
        else if (d == 1) out.arms.push_back(v);
        else
            throw std::invalid_argument("as_cubic_with_arms: vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(d));
    }
    if (out.body.empty()) throw std::invalid_argument("as_cubic_with_arms: empty body");
    for (int v : out.arms)
        if (g.degree(g.neighbors(v)[0]) != 3)
            throw std::invalid_argument("as_cubic_with_arms: arm attached to an arm");
    return out;
}

CubicWithArms connect(const CubicWithArms& g1, int arm1, const CubicWithArms& g2, int arm2) {
    if (!contains(g1.arms, arm1) || !contains(g2.arms, arm2))
        throw std::invalid_argument("connect: not an arm");
    int w1 = g1.graph.neighbors(arm1)[0];
    int w2 = g2.graph.neighbors(arm2)[0];
    int n1 = g1.graph.n() - 1;
    auto map1 = [&](int v) { return v < arm1 ? v : v - 1; };
    auto map2 = [&](int v) { return n1 + (v < arm2 ? v : v - 1); };

    std::vector<Edge> es;
    for (const Edge& e : g1.graph.edges())
        if (!(e == Edge(arm1, w1))) es.emplace_back(map1(e.u), map1(e.v));
    for (const Edge& e : g2.graph.edges())
        if (!(e == Edge(arm2, w2))) es.emplace_back(map2(e.u), map2(e.v));
    es.emplace_back(map1(w1), map2(w2));
    return as_cubic_with_arms(Graph(n1 + g2.graph.n() - 1, std::move(es)));
}

CubicWithArms gadget_piece() {
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
    return as_cubic_with_arms(g);
}

VertexSet gadget_canonical_cover() { return {0, 1, 4}; }

DecompositionTree decompose(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("decompose: graph is not connected");
    if (!g.degrees_one_or_three())
        throw std::invalid_argument("decompose: degrees must be 1 or 3");

    std::vector<Edge> cuts;
    for (const Edge& b : bridges(g))
        if (g.degree(b.u) == 3 && g.degree(b.v) == 3) cuts.push_back(b);

    std::vector<int> comp(g.n(), -1);
    int ncomp = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack = {s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (std::binary_search(cuts.begin(), cuts.end(), Edge(v, w))) continue;
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }

    DecompositionTree tree;
    std::vector<std::vector<int>> members(ncomp);
    for (int v = 0; v < g.n(); ++v) members[comp[v]].push_back(v);

    // Per piece: body and original arms first (sorted), then one stub per
    // incident cut bridge, in bridge order.
    std::vector<std::vector<std::pair<int, int>>> stubs(ncomp);  // (near, far) host pairs
    for (const Edge& b : cuts) {
        stubs[comp[b.u]].emplace_back(b.u, b.v);
        stubs[comp[b.v]].emplace_back(b.v, b.u);
    }

    for (int ci = 0; ci < ncomp; ++ci) {
        std::vector<int> to_host = members[ci];
        auto local_of = [&](int host) {
            return static_cast<int>(std::lower_bound(members[ci].begin(), members[ci].end(),
                                                     host) -
                                    members[ci].begin());
        };
        std::vector<Edge> es;
        for (int v : members[ci])
            for (int w : g.neighbors(v))
                if (w > v && comp[w] == ci) es.emplace_back(local_of(v), local_of(w));
        for (const auto& [near, far] : stubs[ci]) {
            es.emplace_back(local_of(near), static_cast<int>(to_host.size()));
            to_host.push_back(far);
        }
        tree.pieces.push_back(as_cubic_with_arms(Graph(static_cast<int>(to_host.size()), es)));
        tree.to_host.push_back(std::move(to_host));

        for (const Edge& b : bridges(tree.pieces.back().graph))
            require(tree.pieces.back().graph.degree(b.u) == 1 ||
                        tree.pieces.back().graph.degree(b.v) == 1,
                    "decompose: piece body is not 2-edge-connected");
    }

    for (const Edge& b : cuts) {
        PieceLink link;
        int pa = comp[b.u], pb = comp[b.v];
        int ua = b.u, ub = b.v;
        if (pa > pb) {
            std::swap(pa, pb);
            std::swap(ua, ub);
        }
        link.piece_a = pa;
        link.piece_b = pb;
        link.bridge = b;
        // The stub representing the far endpoint sits after the members.
        auto stub_local = [&](int piece, int far) {
            const auto& sl = stubs[piece];
            for (std::size_t i = 0; i < sl.size(); ++i)
                if (sl[i].second == far)
                    return static_cast<int>(members[piece].size() + i);
            throw std::logic_error("decompose: stub not found");
        };
        link.arm_a = stub_local(pa, ub);
        link.arm_b = stub_local(pb, ua);
        tree.links.push_back(link);
    }
    return tree;
}

Completion cubic_completion(const CubicWithArms& piece) {
    Completion comp;
    if (piece.arms.empty()) {
        comp.graph = piece.graph;
        comp.body_to_completion.resize(piece.body.size());
        for (std::size_t i = 0; i < piece.body.size(); ++i)
            comp.body_to_completion[i] = static_cast<int>(i);
        return comp;
    }
    auto body_id = [&](int v) {
        return static_cast<int>(std::lower_bound(piece.body.begin(), piece.body.end(), v) -
                                piece.body.begin());
    };
    int nb = static_cast<int>(piece.body.size());
    std::vector<Edge> es;
    for (const Edge& e : piece.graph.edges())
        if (contains(piece.body, e.u) && contains(piece.body, e.v))
            es.emplace_back(body_id(e.u), body_id(e.v));
    for (std::size_t j = 0; j < piece.arms.size(); ++j) {
        CompletionGadget gad;
        gad.arm_local = piece.arms[j];
        gad.attach_local = piece.graph.neighbors(gad.arm_local)[0];
        gad.attach = body_id(gad.attach_local);
        int base = nb + 5 * static_cast<int>(j);
        gad.a = base;
        gad.b = base + 1;
        gad.c = base + 2;
        gad.d = base + 3;
        gad.apex = base + 4;
        for (Edge e : {Edge(gad.a, gad.b), Edge(gad.a, gad.c), Edge(gad.a, gad.d),
                       Edge(gad.b, gad.c), Edge(gad.b, gad.d), Edge(gad.c, gad.apex),
                       Edge(gad.d, gad.apex), Edge(gad.attach, gad.apex)})
            es.push_back(e);
        comp.gadgets.push_back(gad);
    }
    comp.graph = Graph(nb + 5 * static_cast<int>(piece.arms.size()), std::move(es));
    comp.body_to_completion.resize(piece.body.size());
    for (std::size_t i = 0; i < piece.body.size(); ++i)
        comp.body_to_completion[i] = static_cast<int>(i);
    return comp;
}

VertexSet pull_back_cover(const CubicWithArms& piece, const Completion& comp,
                          const VertexSet& completion_cover) {
    if (!is_vertex_cover(comp.graph, completion_cover))
        throw std::invalid_argument("pull_back_cover: not a cover of the completion");
    std::vector<int> out;
    int nb = static_cast<int>(piece.body.size());
    for (int v : completion_cover)
        if (v < nb) out.push_back(piece.body[v]);
    for (const CompletionGadget& gad : comp.gadgets) out.push_back(gad.attach_local);
    return sorted_unique(std::move(out));
}

namespace {

// Maximal independent set containing seed, grown over ascending vertex ids.
VertexSet greedy_extend(const Graph& g, const VertexSet& seed) {
    std::vector<char> in(g.n(), 0), blocked(g.n(), 0);
    for (int v : seed) {
        in[v] = 1;
        for (int w : g.neighbors(v)) blocked[w] = 1;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (in[v] || blocked[v]) continue;
        in[v] = 1;
        for (int w : g.neighbors(v)) blocked[w] = 1;
    }
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (const Edge& e : g.edges())
        if (contains(s, e.u) && contains(s, e.v)) return false;
    return true;
}

VertexSet cover_complement(const Graph& g, const VertexSet& independent) {
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (!contains(independent, v)) out.push_back(v);
    return out;
}

// Stable seed around the attach vertex of a one-arm piece, following the
// four-case chain q/r, s/t, u/v until a non-adjacent pair (or distinct third
// neighbors) appears.  nullopt in the impossible fifth case.
std::optional<VertexSet> one_arm_seed(const Graph& comp, const CompletionGadget& gad) {
    int p = gad.attach;
    std::vector<int> qr;
    for (int w : comp.neighbors(p))
        if (w != gad.apex) qr.push_back(w);
    require(qr.size() == 2, "one_arm_seed: attach vertex degree broken");
    int q = qr[0], r = qr[1];
    if (!comp.has_edge(q, r)) return VertexSet{std::min(q, r), std::max(q, r)};
    int s = third_neighbor(comp, r, p, q);
    int t = third_neighbor(comp, q, p, r);
    if (s == t || !comp.has_edge(s, t)) return sorted_unique({p, s, t});
    int u = third_neighbor(comp, s, r, t);
    int v = third_neighbor(comp, t, q, s);
    if (u == v || !comp.has_edge(u, v)) return sorted_unique({r, u, v});
    int alpha = third_neighbor(comp, u, s, v);
    int beta = third_neighbor(comp, v, t, u);
    if (alpha != beta) return sorted_unique({r, v, alpha});
    return std::nullopt;
}

// Good minimal cover of the completion that keeps every gadget's c and d
// outside the cover.
VertexSet completion_good_cover(const Completion& comp) {
    VertexSet gadget_seed;
    for (const CompletionGadget& gad : comp.gadgets) {
        gadget_seed.push_back(gad.c);
        gadget_seed.push_back(gad.d);
    }
    std::sort(gadget_seed.begin(), gadget_seed.end());

    std::optional<VertexSet> extra = VertexSet{};
    if (comp.gadgets.size() == 1) extra = one_arm_seed(comp.graph, comp.gadgets[0]);

    if (extra) {
        VertexSet seed = set_union(gadget_seed, *extra);
        if (is_independent(comp.graph, seed)) {
            VertexSet cover = cover_complement(comp.graph, greedy_extend(comp.graph, seed));
            require(is_minimal_vertex_cover(comp.graph, cover),
                    "completion_good_cover: complement is not a minimal cover");
            if (is_good(comp.graph, cover)) return cover;
        }
    }
    // The case analysis covers every 2-edge-connected body; this exhaustive
    // sweep over gadget-pattern covers only backs up that argument.
    for (const VertexSet& ind : maximal_independent_sets(comp.graph, gadget_seed)) {
        VertexSet cover = cover_complement(comp.graph, ind);
        if (is_good(comp.graph, cover)) return cover;
    }
    throw std::logic_error("completion_good_cover: no good gadget-pattern cover");
}

}  // namespace

PiecePlan plan_piece(const CubicWithArms& piece) {
    PiecePlan plan;
    if (piece.arms.empty()) {
        plan.cover = minimalize_cover(piece.graph, greedy_cover(piece.graph));
        require(is_good(piece.graph, plan.cover), "plan_piece: minimal cover of a "
                                                  "2-edge-connected piece is not good");
        plan.comp = cubic_completion(piece);
        plan.completion_cover = plan.cover;
        return plan;
    }
    plan.comp = cubic_completion(piece);
    plan.completion_cover = completion_good_cover(plan.comp);
    plan.cover = pull_back_cover(piece, plan.comp, plan.completion_cover);
    return plan;
}

Matching piece_matching_for_edge(const CubicWithArms& piece, const PiecePlan& plan,
                                 const Edge& local_edge) {
    if (!piece.graph.has_edge(local_edge))
        throw std::invalid_argument("piece_matching_for_edge: edge not in piece");
    if (piece.arms.empty()) return matching_for_edge(piece.graph, plan.cover, local_edge);

    int nb = static_cast<int>(piece.body.size());
    auto body_id = [&](int v) {
        return static_cast<int>(std::lower_bound(piece.body.begin(), piece.body.end(), v) -
                                piece.body.begin());
    };
    Edge target(0, 1);
    if (contains(piece.body, local_edge.u) && contains(piece.body, local_edge.v)) {
        target = Edge(body_id(local_edge.u), body_id(local_edge.v));
    } else {
        int arm = contains(piece.arms, local_edge.u) ? local_edge.u : local_edge.v;
        auto it = std::lower_bound(piece.arms.begin(), piece.arms.end(), arm);
        const CompletionGadget& gad = plan.comp.gadgets[it - piece.arms.begin()];
        target = Edge(gad.attach, gad.apex);
    }

    Matching full = matching_for_edge(plan.comp.graph, plan.completion_cover, target);
    std::vector<Edge> kept;
    std::vector<char> attach_covered(plan.comp.gadgets.size(), 0);
    for (const Edge& e : full.edges)
        if (e.u < nb && e.v < nb) {
            kept.emplace_back(piece.body[e.u], piece.body[e.v]);
            for (std::size_t j = 0; j < plan.comp.gadgets.size(); ++j)
                if (e.touches(plan.comp.gadgets[j].attach)) attach_covered[j] = 1;
        }
    for (std::size_t j = 0; j < plan.comp.gadgets.size(); ++j)
        if (!attach_covered[j])
            kept.emplace_back(plan.comp.gadgets[j].arm_local,
                              plan.comp.gadgets[j].attach_local);

    Matching out = Matching::from_edges(std::move(kept));
    require(out.covers_edge(local_edge), "piece_matching_for_edge: query edge lost");
    VertexSet ends = out.endpoint_set();
    for (int v : plan.cover)
        require(contains(ends, v), "piece_matching_for_edge: cover vertex missed");
    for (const Edge& e : out.edges)
        require(piece.graph.has_edge(e), "piece_matching_for_edge: edge not in piece");
    return out;
}

VertexSet good_cover_piece(const CubicWithArms& piece) {
    PiecePlan plan = plan_piece(piece);
    for (const Edge& e : piece.graph.edges()) piece_matching_for_edge(piece, plan, e);
    return plan.cover;
}

VertexSet merge_covers(const DecompositionTree& tree,
                       const std::vector<VertexSet>& piece_covers) {
    if (piece_covers.size() != tree.pieces.size())
        throw std::invalid_argument("merge_covers: one cover per piece expected");
    std::vector<int> out;
    for (std::size_t p = 0; p < piece_covers.size(); ++p)
        for (int local : piece_covers[p]) {
            if (!contains(tree.pieces[p].body, local))
                throw std::invalid_argument("merge_covers: piece cover leaves the body");
            out.push_back(tree.to_host[p][local]);
        }
    return sorted_unique(std::move(out));
}

BridgedSolver::BridgedSolver(const Graph& g) : g_(g), tree_(decompose(g)) {
    plans_.reserve(tree_.pieces.size());
    std::vector<VertexSet> piece_covers;
    for (const CubicWithArms& piece : tree_.pieces) {
        plans_.push_back(plan_piece(piece));
        piece_covers.push_back(plans_.back().cover);
    }
    cover_ = merge_covers(tree_, piece_covers);

    home_piece_.assign(g_.n(), -1);
    for (std::size_t p = 0; p < tree_.pieces.size(); ++p)
        for (std::size_t local = 0; local < tree_.to_host[p].size(); ++local) {
            int host = tree_.to_host[p][local];
            bool stub = contains(tree_.pieces[p].arms, static_cast<int>(local)) &&
                        g_.degree(host) == 3;
            if (!stub) home_piece_[host] = static_cast<int>(p);
        }
}

int BridgedSolver::local_of(int piece, int host) const {
    const auto& hosts = tree_.to_host[piece];
    for (std::size_t i = 0; i < hosts.size(); ++i)
        if (hosts[i] == host) return static_cast<int>(i);
    throw std::logic_error("BridgedSolver: host vertex not in piece");
}

Matching BridgedSolver::matching_for(const Edge& f) const {
    if (!g_.has_edge(f)) throw std::invalid_argument("matching_for: edge not in graph");

    int start = -1;
    Edge start_edge(0, 1);
    for (const PieceLink& link : tree_.links)
        if (link.bridge == f) {
            start = link.piece_a;
            int near = home_piece_[f.u] == start ? f.u : f.v;
            start_edge = Edge(local_of(start, near), link.arm_a);
            break;
        }
    if (start == -1) {
        start = home_piece_[f.u];
        require(start == home_piece_[f.v], "matching_for: edge spans pieces but is no bridge");
        start_edge = Edge(local_of(start, f.u), local_of(start, f.v));
    }

    std::vector<char> visited(tree_.pieces.size(), 0);
    std::vector<std::pair<int, Edge>> queue = {{start, start_edge}};
    visited[start] = 1;
    std::vector<Edge> host_edges;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [p, query] = queue[qi];
        Matching local = piece_matching_for_edge(tree_.pieces[p], plans_[p], query);
        std::vector<Edge> piece_host;
        for (const Edge& e : local.edges)
            piece_host.emplace_back(tree_.to_host[p][e.u], tree_.to_host[p][e.v]);
        std::sort(piece_host.begin(), piece_host.end());

        for (const PieceLink& link : tree_.links) {
            int other, arm_other;
            if (link.piece_a == p && !visited[link.piece_b]) {
                other = link.piece_b;
                arm_other = link.arm_b;
            } else if (link.piece_b == p && !visited[link.piece_a]) {
                other = link.piece_a;
                arm_other = link.arm_a;
            } else {
                continue;
            }
            visited[other] = 1;
            int far = home_piece_[link.bridge.u] == other ? link.bridge.u : link.bridge.v;
            int w_local = local_of(other, far);
            Edge next(0, 1);
            if (std::binary_search(piece_host.begin(), piece_host.end(), link.bridge)) {
                next = Edge(w_local, arm_other);
            } else {
                int g_end = -1;
                for (int nb : tree_.pieces[other].graph.neighbors(w_local))
                    if (nb != arm_other) {
                        g_end = nb;
                        break;
                    }
                require(g_end != -1, "matching_for: attach vertex has only the stub");
                next = Edge(w_local, g_end);
            }
            queue.emplace_back(other, next);
        }
        host_edges.insert(host_edges.end(), piece_host.begin(), piece_host.end());
    }
    for (char v : visited) require(v, "matching_for: link tree not connected");

    std::sort(host_edges.begin(), host_edges.end());
    host_edges.erase(std::unique(host_edges.begin(), host_edges.end()), host_edges.end());
    require(is_matching(host_edges), "matching_for: pieces produced a conflict");
    Matching out = Matching::from_edges(std::move(host_edges));
    require(out.covers_edge(f), "matching_for: query edge lost");
    VertexSet ends = out.endpoint_set();
    for (int v : cover_) require(contains(ends, v), "matching_for: cover vertex missed");
    for (const Edge& e : out.edges) require(g_.has_edge(e), "matching_for: foreign edge");
    return out;
}

VertexSet good_vertex_cover(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("good_vertex_cover: graph is not connected");
    if (!g.degrees_one_or_three())
        throw std::invalid_argument("good_vertex_cover: degrees must be 1 or 3");
    if (g.n() == 2) return {0};
    return BridgedSolver(g).cover();
}

Matching matching_for_edge_bridged(const Graph& g, const VertexSet& cover,
                                   const DecompositionTree& tree, const Edge& f) {
    BridgedSolver solver(g);
    if (solver.cover() != cover)
        throw std::invalid_argument("matching_for_edge_bridged: cover does not match the "
                                    "deterministic pipeline cover");
    if (solver.tree().to_host != tree.to_host)
        throw std::invalid_argument("matching_for_edge_bridged: tree does not match the "
                                    "deterministic decomposition");
    return solver.matching_for(f);
}

std::optional<WrongSet> find_wrong_set(const Graph& g, const VertexSet& cover) {
    if (!g.is_cubic()) throw std::invalid_argument("find_wrong_set: graph is not cubic");
    if (!is_minimal_vertex_cover(g, cover))
        throw std::invalid_argument("find_wrong_set: not a minimal vertex cover");

    for (const Edge& e : g.edges()) {
        FeGraph fe = build_Fe(g, cover, e);
        std::optional<VertexSet> viol = hall_violator(fe.incidence);
        if (!viol) continue;

        WrongSet ws;
        ws.failing_edge = e;
        ws.x_count = static_cast<int>(viol->size());

        std::vector<int> z, y;
        bool path3_seen = false;
        int path3_mid = -1;
        for (int a : *viol) {
            const ComponentShape& shape = fe.odd_components[a];
            z.insert(z.end(), shape.vertices.begin(), shape.vertices.end());
            int eps = 0, doubles = 0, triples = 0;
            // Every edge leaving an important vertex lands on {x,y} or on an
            // uncovered vertex; adjacent cover vertices share a component.
            std::vector<int> touched;
            for (int imp : shape.important())
                for (int w : g.neighbors(imp)) {
                    if (w == e.u || w == e.v) ++eps;
                    else if (contains(fe.outside, w)) touched.push_back(w);
                    else require(std::find(shape.vertices.begin(), shape.vertices.end(),
                                           w) != shape.vertices.end(),
                                 "find_wrong_set: important vertex reaches a foreign "
                                 "cover component");
                }
            std::sort(touched.begin(), touched.end());
            for (std::size_t i = 0; i < touched.size();) {
                std::size_t j = i;
                while (j < touched.size() && touched[j] == touched[i]) ++j;
                if (j - i == 2) ++doubles;
                if (j - i == 3) ++triples;
                i = j;
            }
            require(static_cast<int>(fe.incidence.adj[a].size()) ==
                        delta(shape) - eps - doubles - 2 * triples,
                    "find_wrong_set: component degree bookkeeping is off");
            ws.delta_sum += delta(shape);
            ws.epsilon_sum += eps;
            ws.double_count += doubles;
            ws.triple_count += triples;
            for (int b : fe.incidence.adj[a]) y.push_back(fe.outside[b]);

            bool triangle = shape.kind == ShapeKind::cycle && shape.vertices.size() == 3;
            bool isolated = shape.kind == ShapeKind::isolated_vertex;
            bool path3 = shape.kind == ShapeKind::path && shape.vertices.size() == 3;
            require(triangle || isolated || path3,
                    "find_wrong_set: violator component has an unexpected shape");
            if (path3) {
                require(!path3_seen, "find_wrong_set: two 3-vertex path components");
                path3_seen = true;
                path3_mid = shape.vertices[1];
            }
        }
        ws.z_set = sorted_unique(std::move(z));
        ws.y_set = sorted_unique(std::move(y));
        require(static_cast<int>(ws.y_set.size()) == ws.x_count - 1,
                "find_wrong_set: violator is not tight");

        ws.w_set = set_union(ws.z_set, ws.y_set);
        ws.w_set = set_union(ws.w_set, VertexSet{std::min(e.u, e.v), std::max(e.u, e.v)});

        require(ws.epsilon_sum == 3 || ws.epsilon_sum == 4,
                "find_wrong_set: epsilon out of range");
        require(ws.delta_sum == 3 * ws.x_count || ws.delta_sum == 3 * ws.x_count + 1,
                "find_wrong_set: delta out of range");
        if (ws.epsilon_sum == 3) {
            require(ws.delta_sum == 3 * ws.x_count, "find_wrong_set: type 1 needs tight delta");
            ws.type = WrongSetType::type1;
        } else if (ws.delta_sum == 3 * ws.x_count) {
            ws.type = WrongSetType::type2a;
        } else {
            ws.type = WrongSetType::type2b;
        }
        require((ws.type == WrongSetType::type2b) == path3_seen,
                "find_wrong_set: path component does not match the type");

        std::vector<Edge> exits;
        for (const Edge& ge : g.edges()) {
            bool iu = contains(ws.w_set, ge.u), iv = contains(ws.w_set, ge.v);
            if (iu != iv) exits.push_back(ge);
        }
        require(exits.size() == 1, "find_wrong_set: wrong set has several exit edges");
        ws.cut_edge = exits[0];
        ws.w_vertex = contains(ws.w_set, ws.cut_edge.u) ? ws.cut_edge.u : ws.cut_edge.v;

        switch (ws.type) {
            case WrongSetType::type1:
                require(ws.w_vertex == e.u || ws.w_vertex == e.v,
                        "find_wrong_set: type 1 exit must leave the failing edge");
                break;
            case WrongSetType::type2a:
                require(contains(ws.y_set, ws.w_vertex),
                        "find_wrong_set: type 2a exit must leave Y");
                break;
            case WrongSetType::type2b:
                require(ws.w_vertex == path3_mid,
                        "find_wrong_set: type 2b exit must leave the path midpoint");
                break;
        }

        int uz = 0;
        for (int end : {e.u, e.v})
            for (int w : g.neighbors(end))
                if (contains(ws.z_set, w)) ++uz;
        require(uz == ws.epsilon_sum, "find_wrong_set: edges from U to Z do not match epsilon");

        require(set_intersection(ws.y_set, cover).empty(), "find_wrong_set: Y meets the cover");
        require(set_intersection(ws.z_set, ws.y_set).empty(), "find_wrong_set: Z meets Y");
        require(!contains(ws.z_set, e.u) && !contains(ws.z_set, e.v) &&
                    !contains(ws.y_set, e.u) && !contains(ws.y_set, e.v),
                "find_wrong_set: failing edge inside Z or Y");

        require(component_after_deleting_edge(g, ws.cut_edge, ws.w_vertex) == ws.w_set,
                "find_wrong_set: W is not a bridge side");
        return ws;
    }
    return std::nullopt;
}

std::vector<int> check_technical_exclusions(const Graph& g, const VertexSet& cover,
                                            const WrongSet& ws) {
    std::vector<int> out;
    VertexSet cw = set_intersection(cover, ws.w_set);

    if (contains(cover, ws.w_vertex)) {
        bool has = false;
        for (int nb : g.neighbors(ws.w_vertex))
            if (contains(cw, nb)) has = true;
        if (!has) out.push_back(1);
    }

    for (const ComponentShape& shape : classify_components(g, cover)) {
        if (shape.kind != ShapeKind::path || shape.vertices.size() != 2) continue;
        int z = shape.vertices[0], u = shape.vertices[1];
        if (z != ws.w_vertex && u != ws.w_vertex && contains(ws.w_set, z) &&
            contains(ws.w_set, u)) {
            out.push_back(2);
            break;
        }
    }

    bool p4 = false, p5 = false;
    for (const ComponentShape& shape : classify_components(g, cw)) {
        if (shape.kind != ShapeKind::path) continue;
        if (shape.vertices.size() == 4) p4 = true;
        if (shape.vertices.size() == 5 &&
            (shape.vertices.front() == ws.w_vertex || shape.vertices.back() == ws.w_vertex))
            p5 = true;
    }
    if (p4) out.push_back(3);
    if (p5) out.push_back(4);
    return out;
}

}  // namespace edgenormal
