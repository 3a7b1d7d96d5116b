#include "ddgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ddg {

Graph::Graph(int n, std::vector<std::string> labels) : n_(n) {
    require(n >= 0, "MalformedInput", "negative vertex count");
    words_ = (n + 63) / 64;
    bits_.assign((std::size_t)n * words_, 0);
    if (!labels.empty())
        require((int)labels.size() == n, "MalformedInput", "label count mismatch");
    labels_ = std::move(labels);
}

bool Graph::edge(int u, int v) const {
    return (bits_[(std::size_t)u * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
    require(u >= 0 && u < n_ && v >= 0 && v < n_ && u != v, "MalformedInput",
            "edge endpoints out of range or equal");
    bits_[(std::size_t)u * words_ + v / 64] |= 1ull << (v % 64);
    bits_[(std::size_t)v * words_ + u / 64] |= 1ull << (u % 64);
}

int Graph::degree(int u) const {
    int d = 0;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::common_neighbors(int u, int v) const {
    int c = 0;
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

long long Graph::edge_count() const {
    long long s = 0;
    for (int u = 0; u < n_; ++u) s += degree(u);
    return s / 2;
}

Graph cayley_graph(const FiniteGroup& g, const std::vector<int>& s) {
    std::vector<char> in(g.order(), 0);
    for (int v : s) {
        require(v >= 0 && v < g.order(), "MalformedInput", "set element out of range");
        in[v] = 1;
    }
    require(!in[g.id()], "ContainsIdentity", "generating set contains the identity");
    for (int v : s)
        require(in[g.inv(v)], "NotInverseClosed",
                "generating set lacks the inverse of element " + std::to_string(v));

    Graph out(g.order(), g.labels());
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y)
            if (in[g.mul(x, g.inv(y))]) out.add_edge(x, y);
    return out;
}

std::map<int, long long> common_neighbor_profile(const Graph& g) {
    std::map<int, long long> hist;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) ++hist[g.common_neighbors(u, v)];
    return hist;
}

namespace {

void append_bits(std::string& out, const std::vector<char>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) {
            v <<= 1;
            if (i + b < bits.size() && bits[i + b]) v |= 1;
        }
        out.push_back((char)(63 + v));
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    long long n = g.n();
    require(n < kMaxGraph6N, "TooLarge", "graph6 encoder capped at n < 2^18");
    std::string out;
    if (n <= 62) {
        out.push_back((char)(63 + n));
    } else {
        out.push_back(126);
        out.push_back((char)(63 + ((n >> 12) & 63)));
        out.push_back((char)(63 + ((n >> 6) & 63)));
        out.push_back((char)(63 + (n & 63)));
    }
    std::vector<char> bits;
    bits.reserve((std::size_t)n * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.edge(u, v) ? 1 : 0);
    append_bits(out, bits);
    return out;
}

Graph graph6_decode(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    require(!text.empty(), "MalformedInput", "empty graph6 string");
    std::size_t pos = 0;
    long long n;
    if ((unsigned char)text[0] == 126) {
        require(text.size() >= 4, "MalformedInput", "truncated graph6 header");
        require((unsigned char)text[1] != 126, "TooLarge",
                "8-byte graph6 headers (n >= 2^18) not supported");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int c = (unsigned char)text[i] - 63;
            require(c >= 0 && c < 64, "MalformedInput", "bad graph6 header byte");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        n = (unsigned char)text[0] - 63;
        require(n >= 0 && n <= 62, "MalformedInput", "bad graph6 header byte");
        pos = 1;
    }
    require(n < kMaxGraph6N, "TooLarge", "graph6 decoder capped at n < 2^18");

    long long nbits = n * (n - 1) / 2;
    long long nchars = (nbits + 5) / 6;
    require((long long)(text.size() - pos) == nchars, "MalformedInput",
            "graph6 body has wrong length");
    Graph g((int)n);
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int c = (unsigned char)text[pos + bit / 6] - 63;
            require(c >= 0 && c < 64, "MalformedInput", "bad graph6 body byte");
            if ((c >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    // padding bits must be zero
    for (long long b = bit; b < nchars * 6; ++b) {
        int c = (unsigned char)text[pos + b / 6] - 63;
        require(((c >> (5 - b % 6)) & 1) == 0, "MalformedInput", "nonzero graph6 padding");
    }
    return g;
}

std::string dot_export(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int u = 0; u < g.n(); ++u) {
        os << "  v" << u;
        if (!g.labels().empty()) os << " [label=\"" << g.labels()[u] << "\"]";
        os << ";\n";
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.edge(u, v)) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json adjacency_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    nlohmann::json adj = nlohmann::json::array();
    for (int u = 0; u < g.n(); ++u) {
        nlohmann::json r = nlohmann::json::array();
        for (int v = 0; v < g.n(); ++v)
            if (g.edge(u, v)) r.push_back(v);
        adj.push_back(std::move(r));
    }
    j["adjacency"] = std::move(adj);
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    require((int)perm.size() == g.n(), "MalformedInput", "permutation length mismatch");
    std::vector<char> seen(g.n(), 0);
    for (int v : perm) {
        require(v >= 0 && v < g.n() && !seen[v], "MalformedInput", "not a permutation");
        seen[v] = 1;
    }
    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels.resize(g.n());
        for (int v = 0; v < g.n(); ++v) labels[perm[v]] = g.labels()[v];
    }
    Graph out(g.n(), std::move(labels));
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.edge(u, v)) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace ddg
