#include "edgenormal/graph6.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace edgenormal {

namespace {

constexpr int kMaxLongN = 258047;  // largest n of the 3-byte long form

std::string strip(const std::string& text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    return text.substr(a, b - a);
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = strip(text);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw ParseError("graph6: empty input");
    for (char c : s)
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");

    std::size_t pos = 0;
    long long n;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126)
            throw ParseError("graph6: vertex count beyond supported range");
        if (s.size() < 4) throw ParseError("graph6: truncated vertex count");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
        if (n <= 62) throw ParseError("graph6: non-canonical long-form vertex count");
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }

    long long nbits = n * (n - 1) / 2;
    long long nchars = (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != nchars)
        throw ParseError("graph6: body length does not match vertex count");

    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int group = s[pos + bit / 6] - 63;
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    for (long long b = nbits; b < nchars * 6; ++b) {
        int group = s[pos + b / 6] - 63;
        if ((group >> (5 - b % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    long long n = g.n();
    if (n > kMaxLongN) throw std::invalid_argument("to_graph6: graph too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    long long nbits = n * (n - 1) / 2;
    std::string body((nbits + 5) / 6, 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    for (char& c : body) c = static_cast<char>(c + 63);
    return out + body;
}

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw ParseError("edgelist: malformed header, expected \"n m\"");
    if (n < 0 || m < 0) throw ParseError("edgelist: negative count in header");
    std::vector<Edge> edges;
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(in >> u >> v)) throw ParseError("edgelist: expected " + std::to_string(m) +
                                              " edges, got " + std::to_string(k));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edgelist: vertex id out of range in edge " + std::to_string(u) +
                             " " + std::to_string(v));
        if (u == v) throw ParseError("edgelist: loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw ParseError("edgelist: trailing data after edge list");
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw ParseError("edgelist: duplicate edge " + std::to_string(edges[i].u) + " " +
                             std::to_string(edges[i].v));
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6: return parse_graph6(text);
        case GraphFormat::edgelist: return parse_edgelist(text);
    }
    throw std::invalid_argument("parse_graph: unknown format");
}

}  // namespace edgenormal
