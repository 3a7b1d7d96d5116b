#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddgraph/graph.hpp"

namespace ddg {

constexpr int kMaxIsoN = 128;

struct Certificate {
    int n = 0;
    std::vector<std::uint64_t> bits;  // canonical upper-triangle, MSB-first
    std::vector<int> perm;            // perm[rank] = original vertex
    std::string hex() const;

    bool operator==(const Certificate& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const Certificate& o) const { return !(*this == o); }
};

// Exhaustive individualization-refinement: color refinement by neighbor
// counts, backtracking over the first largest non-singleton cell, leaves
// ordered by (invariant refinement trace, adjacency bits); the least leaf is
// the certificate. Equality of certificates is equivalent to isomorphism.
Certificate canonical_form(const Graph& g);

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> mapping;  // vertex u of g1 -> mapping[u] of g2
};

IsoResult are_isomorphic(const Graph& g1, const Graph& g2);

// indices of the input graphs grouped into isomorphism classes, in order of
// first appearance; jobs > 1 computes certificates in parallel
std::vector<std::vector<int>> classify(const std::vector<Graph>& graphs, int jobs = 1);

}  // namespace ddg
