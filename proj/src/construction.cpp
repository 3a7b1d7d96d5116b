#include "ddgraph/construction.hpp"

#include <algorithm>
#include <cassert>

namespace ddg {

bool is_bijection(const Phi& phi, int t) {
    if ((int)phi.size() != t) return false;
    std::vector<char> seen(t + 1, 0);
    for (int v : phi) {
        if (v < 1 || v > t || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

ConditionResult symmetry_condition_check(const Field& f, const Phi& phi) {
    int t = f.t();
    require(is_bijection(phi, t), "WrongLength",
            "phi must be a bijection on 1.." + std::to_string(t));
    if (t % 2 == 0) {
        // t even forces q odd, so theta^(t/2) is the order-2 scalar -1; the
        // i = t/2 instance can only be satisfied through this. Sanity-check
        // instead of assuming.
        Elem half = f.pow_tau((long long)(f.q() - 1) * (t / 2));
        require(f.in_subfield(half), "OrbitDegenerate",
                "theta^(t/2) is not a subfield scalar");
    }
    for (int i = 1; i <= t; ++i) {
        const Hyperplane& src = f.hyperplane(phi[i - 1]);
        std::vector<Elem> scaled =
            f.scale_hyperplane(src, f.pow_tau((long long)(f.q() - 1) * i));
        int j = (t - i) % t;
        if (j == 0) j = t;
        if (scaled != f.hyperplane(phi[j - 1]).members) return {false, i};
    }
    return {true, 0};
}

std::vector<Phi> enumerate_symmetric_permutations(const Field& f, bool all_translates) {
    int t = f.t();
    require(t <= kMaxEnumerationT, "TTooLarge",
            "enumeration capped at t = " + std::to_string(kMaxEnumerationT));

    // forced[i][j]: scaling M_j by theta^i, as an orbit index (1-based slots)
    std::vector<std::vector<int>> forced(t + 1, std::vector<int>(t + 1, 0));
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j)
            forced[i][j] = f.hyperplane_index(
                f.scale_hyperplane(f.hyperplane(j), f.pow_tau((long long)(f.q() - 1) * i)));

    std::vector<Phi> out;
    Phi phi(t, 0);
    std::vector<char> used(t + 1, 0);
    int half = (t - 1) / 2;

    auto finish = [&]() {
        // pairs fixed; positions t/2 (when even) and t take the leftovers
        std::vector<int> rest;
        for (int v = 1; v <= t; ++v)
            if (!used[v]) rest.push_back(v);
        if (t % 2 == 1) {
            assert(rest.size() == 1);
            phi[t - 1] = rest[0];
            out.push_back(phi);
            phi[t - 1] = 0;
        } else {
            assert(rest.size() == 2);
            // the i = t/2 constraint is scalar-invariance, which every
            // hyperplane satisfies (checked here rather than assumed)
            for (int v : rest)
                require(forced[t / 2][v] == v, "OrbitDegenerate",
                        "theta^(t/2) moved a hyperplane");
            for (int a = 0; a < 2; ++a) {
                phi[t / 2 - 1] = rest[a];
                phi[t - 1] = rest[1 - a];
                out.push_back(phi);
            }
            phi[t / 2 - 1] = phi[t - 1] = 0;
        }
    };

    auto rec = [&](auto&& self, int i) -> void {
        if (i > half) {
            finish();
            return;
        }
        int lo = 1, hi = t;
        if (i == 1 && !all_translates) lo = hi = 1;  // orbit representative
        for (int j = lo; j <= hi; ++j) {
            if (used[j]) continue;
            int fj = forced[i][j];  // phi(t-i) is forced by phi(i) = j
            if (fj == j || used[fj]) continue;
            used[j] = used[fj] = 1;
            phi[i - 1] = j;
            phi[t - i - 1] = fj;
            self(self, i + 1);
            used[j] = used[fj] = 0;
            phi[i - 1] = phi[t - i - 1] = 0;
        }
    };
    rec(rec, 1);

    std::sort(out.begin(), out.end());
    for (const Phi& p : out)
        require(symmetry_condition_check(f, p).ok, "WrongLength",
                "internal: enumerated permutation fails the condition");
    return out;
}

ClosedFormPhi closed_form_permutation(int t, const Field* validate_against) {
    require(t > 2, "TNotSupported", "need t > 2");
    Phi phi;
    phi.reserve(t);
    if (t % 2 == 1) {
        // (1, t-1, t-3, ..., 2, t, t-2, ..., 3)
        phi.push_back(1);
        for (int v = t - 1; v >= 2; v -= 2) phi.push_back(v);
        phi.push_back(t);
        for (int v = t - 2; v >= 3; v -= 2) phi.push_back(v);
    } else {
        // literal reading of the even-t pattern:
        // (1, t-1, ..., t/2+2, t/2-1, ..., 2, t/2, t-2, ..., t/2+1, t, t/2-2, ..., 3)
        phi.push_back(1);
        for (int v = t - 1; v >= t / 2 + 2; v -= 2) phi.push_back(v);
        for (int v = t / 2 - 1; v >= 2; v -= 2) phi.push_back(v);
        phi.push_back(t / 2);
        for (int v = t - 2; v >= t / 2 + 1; v -= 2) phi.push_back(v);
        phi.push_back(t);
        for (int v = t / 2 - 2; v >= 3; v -= 2) phi.push_back(v);
    }

    bool good = is_bijection(phi, t);
    if (validate_against) {
        require(validate_against->t() == t, "WrongLength", "field has a different t");
        good = good && symmetry_condition_check(*validate_against, phi).ok;
        if (!good) {
            std::vector<Phi> all = enumerate_symmetric_permutations(*validate_against);
            require(!all.empty(), "TNotSupported", "no valid permutation exists");
            return {all.front(), true};
        }
    } else {
        require(good, "TNotSupported",
                "closed form does not yield a bijection for t = " + std::to_string(t) +
                    "; supply a field to enable the enumeration fallback");
    }
    return {phi, false};
}

GeneratingSet build_generating_set(const AffineGroup& g, const Phi& phi) {
    const Field& f = g.field();
    int t = f.t();
    require(is_bijection(phi, t), "WrongLength",
            "phi must be a bijection on 1.." + std::to_string(t));
    GeneratingSet s;
    for (int i = 1; i <= t; ++i) {
        for (Elem a = 0; a < f.order(); ++a) {
            if (f.hyperplane_contains(phi[i - 1], a)) continue;
            s.elements.push_back(g.index({i % t, a}));
        }
    }
    std::sort(s.elements.begin(), s.elements.end());
    s.k = (int)s.elements.size();
    // |S| = t(q^r - q^(r-1)) = q^(r-1)(q^r - 1), and 0 in M rules out e
    long long expect = (long long)t * (f.order() - f.order() / f.q());
    require(s.k == expect, "OrbitDegenerate", "generating set has unexpected size");
    require(!std::binary_search(s.elements.begin(), s.elements.end(), g.table().id()),
            "OrbitDegenerate", "identity slipped into the generating set");
    return s;
}

}  // namespace ddg
