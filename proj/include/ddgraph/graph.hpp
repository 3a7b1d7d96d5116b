#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ddgraph/group.hpp"

namespace ddg {

constexpr int kMaxGraph6N = 1 << 18;

// Dense undirected graph, one bit-row per vertex.
class Graph {
public:
    explicit Graph(int n, std::vector<std::string> labels = {});

    int n() const { return n_; }
    int words() const { return words_; }
    bool edge(int u, int v) const;
    void add_edge(int u, int v);
    const std::uint64_t* row(int u) const { return bits_.data() + (std::size_t)u * words_; }
    int degree(int u) const;
    int common_neighbors(int u, int v) const;
    long long edge_count() const;
    const std::vector<std::string>& labels() const { return labels_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;
};

// x ~ y iff x y^-1 in S; S must be inverse-closed and identity-free
Graph cayley_graph(const FiniteGroup& g, const std::vector<int>& s);

// histogram over unordered distinct pairs of their common-neighbor count
std::map<int, long long> common_neighbor_profile(const Graph& g);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

std::string dot_export(const Graph& g);
nlohmann::json adjacency_json(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& perm);  // vertex v -> perm[v]

}  // namespace ddg
