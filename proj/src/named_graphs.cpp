#include "edgenormal/named_graphs.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace edgenormal {

namespace {

Graph make(int n, std::vector<Edge> es) { return Graph(n, std::move(es)); }

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return make(n, std::move(es));
}

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);        // outer cycle
        es.emplace_back(i, i + 5);              // spoke
        es.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return make(10, std::move(es));
}

// Replace vertex v by a triangle, one new edge per old neighbor.
Graph expand_to_triangle(const Graph& g, int v) {
    const auto& nb = g.neighbors(v);
    if (nb.size() != 3) throw std::invalid_argument("expand_to_triangle: degree must be 3");
    int n = g.n();
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        if (!e.touches(v)) {
            es.push_back(e);
            continue;
        }
        int w = e.other(v);
        if (w == nb[0]) es.emplace_back(v, w);
        else if (w == nb[1]) es.emplace_back(n, w);
        else es.emplace_back(n + 1, w);
    }
    es.emplace_back(v, n);
    es.emplace_back(v, n + 1);
    es.emplace_back(n, n + 1);
    return make(n + 2, std::move(es));
}

int parse_suffix(const std::string& name, const std::string& prefix) {
    std::string digits = name.substr(prefix.size());
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("named_graph: bad parameter in \"" + name + "\"");
    return std::stoi(digits);
}

}  // namespace

Graph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle_graph: need k >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    return make(k, std::move(es));
}

Graph path_graph(int k) {
    if (k < 1) throw std::invalid_argument("path_graph: need k >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    return make(k, std::move(es));
}

Graph flower_snark(int k) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("flower_snark: need odd k >= 3");
    // Blocks: outer cycle A = 0..k-1, centers B = k..2k-1, then a single
    // 2k-cycle through C = 2k..3k-1 and D = 3k..4k-1 closed crosswise.
    std::vector<Edge> es;
    auto A = [&](int i) { return i; };
    auto B = [&](int i) { return k + i; };
    auto C = [&](int i) { return 2 * k + i; };
    auto D = [&](int i) { return 3 * k + i; };
    for (int i = 0; i < k; ++i) {
        es.emplace_back(A(i), A((i + 1) % k));
        es.emplace_back(B(i), A(i));
        es.emplace_back(B(i), C(i));
        es.emplace_back(B(i), D(i));
        if (i + 1 < k) {
            es.emplace_back(C(i), C(i + 1));
            es.emplace_back(D(i), D(i + 1));
        }
    }
    es.emplace_back(C(k - 1), D(0));
    es.emplace_back(D(k - 1), C(0));
    return make(4 * k, std::move(es));
}

Graph gadget_completion_pair() {
    // Two copies of the one-arm gadget body {a,b,c,d,w} (a,b,c,d a K4 minus
    // the edge cd, w adjacent to c and d), arms joined into the bridge {4,9}.
    std::vector<Edge> es = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
                            {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9},
                            {4, 9}};
    return make(10, std::move(es));
}

Graph named_graph(const std::string& name) {
    if (name == "k4") return complete_graph(4);
    if (name == "triangle") return complete_graph(3);
    if (name == "k33") {
        std::vector<Edge> es;
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) es.emplace_back(i, j);
        return make(6, std::move(es));
    }
    if (name == "prism") {
        return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    }
    if (name == "cube") {
        std::vector<Edge> es;
        for (int v = 0; v < 8; ++v)
            for (int b = 0; b < 3; ++b)
                if (v < (v ^ (1 << b))) es.emplace_back(v, v ^ (1 << b));
        return make(8, std::move(es));
    }
    if (name == "petersen") return petersen();
    if (name == "tietze") return expand_to_triangle(petersen(), 0);
    if (name == "gadget_completion_pair") return gadget_completion_pair();
    if (name.rfind("flower", 0) == 0) return flower_snark(parse_suffix(name, "flower"));
    if (name.rfind("c", 0) == 0) return cycle_graph(parse_suffix(name, "c"));
    if (name.rfind("p", 0) == 0) return path_graph(parse_suffix(name, "p"));
    throw std::invalid_argument("named_graph: unknown name \"" + name + "\"");
}

std::vector<std::string> named_graph_names() {
    return {"k4",       "k33",    "prism", "cube", "petersen",
            "tietze",   "triangle", "gadget_completion_pair"};
}

Graph random_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("random_cubic: need even n >= 4");
    std::mt19937_64 rng(seed);
    // Pairing model: 3 half-edges per vertex, a uniform perfect matching of
    // them; resample until the projected graph is simple and connected.
    std::vector<int> points(3 * n);
    for (int p = 0; p < 3 * n; ++p) points[p] = p / 3;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<Edge> es;
        bool simple = true;
        for (int i = 0; simple && i < 3 * n; i += 2) {
            if (points[i] == points[i + 1]) simple = false;
            else es.emplace_back(points[i], points[i + 1]);
        }
        if (!simple) continue;
        std::sort(es.begin(), es.end());
        if (std::adjacent_find(es.begin(), es.end()) != es.end()) continue;
        Graph g(n, std::move(es));
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("random_cubic: rejection sampling failed");
}

}  // namespace edgenormal
