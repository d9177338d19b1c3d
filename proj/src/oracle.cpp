#include "edgenormal/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace edgenormal {

std::string to_string(Tristate t) {
    switch (t) {
        case Tristate::no: return "false";
        case Tristate::yes: return "true";
        case Tristate::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
    Clock::time_point deadline;
    long long nodes_left;
    bool exceeded = false;

    explicit BudgetState(const SearchBudget& b)
        : deadline(Clock::now() + std::chrono::milliseconds(b.max_millis)),
          nodes_left(b.node_limit) {}

    bool tick() {
        if (--nodes_left < 0 || ((nodes_left & 0x3ff) == 0 && Clock::now() > deadline))
            exceeded = true;
        return !exceeded;
    }
};

std::uint64_t to_mask(const VertexSet& s) {
    std::uint64_t m = 0;
    for (int v : s) m |= std::uint64_t(1) << v;
    return m;
}

// Clique-cover search.  covered: vertices in some chosen clique; admissible:
// stable sets meeting every chosen clique.  Success once covered is full
// while the admissible sets still cover everything.
bool normal_rec(const std::vector<std::uint64_t>& cliques, std::uint64_t covered,
                const std::vector<std::uint64_t>& admissible, std::uint64_t full,
                BudgetState& budget) {
    if (!budget.tick()) return false;
    std::uint64_t stable_union = 0;
    for (std::uint64_t s : admissible) stable_union |= s;
    if (stable_union != full) return false;
    if (covered == full) return true;

    int best_v = -1, best_count = -1;
    for (int v = 0; v < 64; ++v) {
        std::uint64_t bit = std::uint64_t(1) << v;
        if (!(full & bit) || (covered & bit)) continue;
        int count = 0;
        for (std::uint64_t q : cliques)
            if (q & bit) ++count;
        if (best_v == -1 || count < best_count) {
            best_v = v;
            best_count = count;
        }
    }
    std::uint64_t bit = std::uint64_t(1) << best_v;
    for (std::uint64_t q : cliques) {
        if (!(q & bit)) continue;
        std::vector<std::uint64_t> next;
        for (std::uint64_t s : admissible)
            if (s & q) next.push_back(s);
        if (normal_rec(cliques, covered | q, next, full, budget)) return true;
        if (budget.exceeded) return false;
    }
    return false;
}

}  // namespace

Tristate brute_normal(const Graph& g, const SearchBudget& budget) {
    if (g.n() > budget.max_vertices || g.n() > 64) return Tristate::unknown;
    if (g.n() == 0) return Tristate::yes;

    std::vector<std::uint64_t> cliques, stables;
    for (const VertexSet& q : maximal_independent_sets(complement(g)))
        cliques.push_back(to_mask(q));
    for (const VertexSet& s : maximal_independent_sets(g)) stables.push_back(to_mask(s));
    std::uint64_t full =
        g.n() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n()) - 1;

    BudgetState state(budget);
    bool found = normal_rec(cliques, 0, stables, full, state);
    if (state.exceeded) return Tristate::unknown;
    return found ? Tristate::yes : Tristate::no;
}

bool brute_normal_complement_consistency(const Graph& g, const SearchBudget& budget) {
    Tristate a = brute_normal(g, budget);
    Tristate b = brute_normal(complement(g), budget);
    if (a == Tristate::unknown || b == Tristate::unknown)
        throw std::runtime_error("brute_normal_complement_consistency: budget exceeded");
    return a == b;
}

namespace {

bool good_extend(const Graph& g, const VertexSet& cover, std::vector<char>& used) {
    int pending = -1;
    for (int c : cover)
        if (!used[c]) {
            pending = c;
            break;
        }
    if (pending == -1) return true;
    for (int w : g.neighbors(pending)) {
        if (used[w]) continue;
        used[pending] = used[w] = 1;
        bool ok = good_extend(g, cover, used);
        used[pending] = used[w] = 0;
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool brute_good(const Graph& g, const VertexSet& cover) {
    if (!is_vertex_cover(g, cover))
        throw std::invalid_argument("brute_good: not a vertex cover");
    std::vector<char> used(g.n(), 0);
    for (const Edge& e : g.edges()) {
        used[e.u] = used[e.v] = 1;
        bool ok = good_extend(g, cover, used);
        used[e.u] = used[e.v] = 0;
        if (!ok) return false;
    }
    return true;
}

Tristate brute_strongly_edge_normal(const Graph& g, const SearchBudget& budget) {
    if (g.n() > budget.max_vertices || g.n() > 16) return Tristate::unknown;
    for (const VertexSet& cover : enumerate_minimal_covers(g))
        if (brute_good(g, cover)) return Tristate::yes;
    return Tristate::no;
}

Tristate brute_edge_normal(const Graph& g, const SearchBudget& budget) {
    if (g.m() == 0) return Tristate::yes;
    return brute_normal(line_graph(g).line, budget);
}

std::vector<VertexSet> enumerate_minimal_covers(const Graph& g) {
    if (g.n() > 16)
        throw std::invalid_argument("enumerate_minimal_covers: more than 16 vertices");
    std::vector<VertexSet> out;
    for (const VertexSet& ind : maximal_independent_sets(g)) {
        VertexSet cover;
        for (int v = 0; v < g.n(); ++v)
            if (!contains(ind, v)) cover.push_back(v);
        out.push_back(std::move(cover));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Backtracking enumeration over per-vertex degree targets.  Vertices are
// processed in id order; each picks the higher-id neighbors completing its
// degree.  Untouched vertices with equal targets are interchangeable, so a
// valid pick may only take id-ascending prefixes of them: once an untouched
// vertex is skipped, its whole target class is barred for the rest of the
// pick.  That forces ids into first-touch order, which makes a vertex that is
// still untouched at its own turn a dead (disconnected) branch.
struct DegreeEnumerator {
    std::vector<int> target;
    int n;
    std::vector<int> deg;
    std::vector<Edge> edges;
    std::vector<Graph> out;

    explicit DegreeEnumerator(std::vector<int> t)
        : target(std::move(t)), n(static_cast<int>(target.size())), deg(n, 0) {}

    void run() { place(0); }

    void place(int v) {
        if (v == n) {
            out.emplace_back(n, edges);
            return;
        }
        if (v > 0 && deg[v] == 0) return;
        std::vector<int> cand;
        for (int w = v + 1; w < n; ++w)
            if (deg[w] < target[w]) cand.push_back(w);
        std::vector<int> chosen;
        pick(v, cand, 0, target[v] - deg[v], chosen, 0);
    }

    // barred: bitmask of target classes whose untouched members may no longer
    // be taken.
    void pick(int v, const std::vector<int>& cand, std::size_t i, int need,
              std::vector<int>& chosen, unsigned barred) {
        if (need == 0) {
            commit(v, chosen);
            return;
        }
        if (cand.size() - i < static_cast<std::size_t>(need)) return;
        int w = cand[i];
        bool untouched = deg[w] == 0;
        if (!(untouched && (barred & (1u << target[w])))) {
            chosen.push_back(w);
            pick(v, cand, i + 1, need - 1, chosen, barred);
            chosen.pop_back();
        }
        pick(v, cand, i + 1, need, chosen, untouched ? barred | (1u << target[w]) : barred);
    }

    void commit(int v, const std::vector<int>& chosen) {
        for (int w : chosen) {
            ++deg[v];
            ++deg[w];
            edges.emplace_back(v, w);
        }
        place(v + 1);
        for (int w : chosen) {
            --deg[v];
            --deg[w];
            edges.pop_back();
        }
    }
};

std::vector<Graph> dedupe(const std::vector<Graph>& all) {
    // Bucket by cheap invariants first; cubic graphs share degree data, so
    // triangle and 4-cycle statistics do the discriminating.
    struct Bucket {
        std::vector<int> key;
        std::vector<Graph> reps;
    };
    std::vector<Bucket> buckets;
    std::vector<Graph> reps;
    for (const Graph& g : all) {
        std::vector<int> tri(g.n(), 0);
        int walks4 = 0;
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) {
                int codeg = static_cast<int>(
                    set_intersection(g.neighbors(u), g.neighbors(v)).size());
                walks4 += codeg * (codeg - 1) / 2;
                if (g.has_edge(u, v)) {
                    tri[u] += codeg;
                    tri[v] += codeg;
                }
            }
        std::sort(tri.begin(), tri.end());
        std::vector<int> key = {g.n(), g.m(), walks4};
        key.insert(key.end(), tri.begin(), tri.end());

        Bucket* home = nullptr;
        for (Bucket& b : buckets)
            if (b.key == key) {
                home = &b;
                break;
            }
        if (!home) {
            buckets.push_back({key, {}});
            home = &buckets.back();
        }
        bool fresh = true;
        for (const Graph& r : home->reps)
            if (is_isomorphic(g, r)) {
                fresh = false;
                break;
            }
        if (fresh) {
            home->reps.push_back(g);
            reps.push_back(g);
        }
    }
    return reps;
}

}  // namespace

std::vector<Graph> enumerate_connected_cubic(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("enumerate_connected_cubic: n must be even and >= 4");
    DegreeEnumerator en(std::vector<int>(n, 3));
    en.run();
    return dedupe(en.out);
}

std::vector<CubicWithArms> enumerate_one_arm_pieces(int body_size) {
    if (body_size < 3 || body_size % 2 == 0)
        throw std::invalid_argument("enumerate_one_arm_pieces: body size must be odd and >= 3");
    std::vector<int> target(body_size, 3);
    target.push_back(1);
    DegreeEnumerator en(std::move(target));
    en.run();
    std::vector<Graph> bodies_2ec;
    for (const Graph& g : en.out)
        if (bridges(g).size() == 1) bodies_2ec.push_back(g);
    std::vector<CubicWithArms> out;
    for (const Graph& g : dedupe(bodies_2ec)) out.push_back(as_cubic_with_arms(g));
    return out;
}

namespace {

bool iso_rec(const Graph& a, const Graph& b, const std::vector<int>& order, std::size_t i,
             std::vector<int>& map, std::vector<char>& used) {
    if (i == order.size()) return true;
    int v = order[i];
    for (int w = 0; w < b.n(); ++w) {
        if (used[w] || b.degree(w) != a.degree(v)) continue;
        bool fits = true;
        for (std::size_t j = 0; j < i && fits; ++j)
            if (a.has_edge(v, order[j]) != b.has_edge(w, map[order[j]])) fits = false;
        if (!fits) continue;
        map[v] = w;
        used[w] = 1;
        if (iso_rec(a, b, order, i + 1, map, used)) return true;
        used[w] = 0;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    // BFS order keeps each vertex adjacent to an earlier one, so the partial
    // map is checked against a real constraint at every step.
    std::vector<int> order;
    std::vector<char> seen(a.n(), 0);
    for (int s = 0; s < a.n(); ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        order.push_back(s);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head)
            for (int w : a.neighbors(order[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
    }
    std::vector<int> map(a.n(), -1);
    std::vector<char> used(b.n(), 0);
    return iso_rec(a, b, order, 0, map, used);
}

}  // namespace edgenormal
