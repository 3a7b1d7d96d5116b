#pragma once

#include <vector>

#include "ddgraph/field.hpp"
#include "ddgraph/group.hpp"

namespace ddg {

constexpr int kMaxEnumerationT = 12;

// phi as 1-based images: phi[i-1] is the image of position i
using Phi = std::vector<int>;

struct ConditionResult {
    bool ok = false;
    int first_failing = 0;  // 1-based position, 0 when ok
};

// The inversion-symmetry condition on phi: scaling M_{phi(i)} by theta^i must
// land on M_{phi(t-i)} for every i (indices mod t, 0 read as t). Exactly the
// permutations passing this produce an inverse-closed generating set.
ConditionResult symmetry_condition_check(const Field& f, const Phi& phi);

struct ClosedFormPhi {
    Phi phi;
    bool fallback = false;  // formula failed validation; lex-least valid used
};

// The closed-form seed permutation for a given t. With a field supplied the
// result is validated and, on failure, replaced by the lexicographically
// least enumerated valid permutation (flagged).
ClosedFormPhi closed_form_permutation(int t, const Field* validate_against = nullptr);

// All valid permutations in lexicographic order. By default one representative
// per value-translation orbit (the phi(1)=1 member, which is lex-least in its
// orbit); pass all_translates to get every raw bijection.
std::vector<Phi> enumerate_symmetric_permutations(const Field& f, bool all_translates = false);

struct GeneratingSet {
    std::vector<int> elements;  // sorted group indices
    int k = 0;
};

// S = union over i=1..t of f^i (N minus M_{phi(i)}), as group indices
GeneratingSet build_generating_set(const AffineGroup& g, const Phi& phi);

bool is_bijection(const Phi& phi, int t);

}  // namespace ddg
