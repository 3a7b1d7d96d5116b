#pragma once

#include <vector>

#include "ddgraph/graph.hpp"

namespace ddg {

struct DezaParams {
    long long v = 0, k = 0, b = 0, a = 0;  // b >= a
    bool operator==(const DezaParams&) const = default;
};

// graph must be regular with at most two distinct common-neighbor counts
DezaParams deza_check(const Graph& g);

struct DDGParams {
    long long v = 0, k = 0, l1 = 0, l2 = 0, m = 0, n = 0;
    bool operator==(const DDGParams&) const = default;
};

struct DDGAssignment {
    DDGParams params;
    std::vector<std::vector<int>> classes;  // sorted by least member
    bool degenerate = false;                // l1 == l2, or a trivial partition
};

struct DDGResult {
    // all valid (l1, l2) assignments; preferred one first
    // (l1 != l2 before l1 == l2, then larger class count m)
    std::vector<DDGAssignment> valid;
    const DDGAssignment& primary() const { return valid.front(); }
};

// partition discovery from the graph alone: same-class = "has l1 common
// neighbors", which must come out an equivalence with equal class sizes
DDGResult ddg_check(const Graph& g);

struct DDSResult {
    long long l1 = 0, l2 = 0;
};

// quotient multiset check: {x y^-1} covers N-{e} l1 times each, G-N l2 times
DDSResult dds_check(const FiniteGroup& g, const std::vector<int>& s,
                    const std::vector<int>& n);

struct DiscoverResult {
    std::vector<int> subgroup;
    long long l1 = 0, l2 = 0;
};

// recover the exceptional subgroup from S alone and cross-check that its
// right cosets equal the Cayley graph partition
DiscoverResult dds_discover_subgroup(const FiniteGroup& g, const std::vector<int>& s);

// the closed-form parameter tuple for the affine construction
DDGParams predicted_params(long long q, int r);

// multiset of x y^-1 counts indexed by group element
std::vector<long long> quotient_multiset(const FiniteGroup& g, const std::vector<int>& s);

}  // namespace ddg
