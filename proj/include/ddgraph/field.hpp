#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ddgraph/error.hpp"

namespace ddg {

// Field element id: base-p digit vector (c0,c1,...) packed as c0 + c1*p + ...
using Elem = std::uint32_t;

constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

struct FieldSpec {
    int p = 2;
    int e = 1;
    int r = 2;
    // monic, little-endian (constant term first), length e*r+1; empty = pick
    // the lexicographically least monic irreducible with x primitive
    std::vector<int> modulus;
};

struct Hyperplane {
    // canonical order: zero first, then ascending discrete log
    std::vector<Elem> members;
    int index = 0;  // 1..t position in the orbit
};

// GF(q^r) with q = p^e, represented over GF(p) by the modulus polynomial.
// Dual representation: packed digit vectors for add, log/exp tables for mul.
class Field {
public:
    static Field build(const FieldSpec& spec);

    int p() const { return p_; }
    int e() const { return e_; }
    int r() const { return r_; }
    int degree() const { return n_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order() const { return order_; }
    int t() const { return t_; }
    int t1() const { return t1_; }
    const FieldSpec& spec() const { return spec_; }  // modulus always filled in

    Elem tau() const { return tau_; }
    Elem theta() const { return theta_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long k) const;
    Elem pow_tau(long long i) const;  // tau^i, exponent taken mod order-1

    // -1 for zero, else discrete log base tau
    int log(Elem a) const;
    // 0 for zero, else 1+log; the canonical element ordering
    int ordinal(Elem a) const { return a == 0 ? 0 : 1 + log(a); }
    Elem from_ordinal(int o) const;

    std::vector<int> digits(Elem a) const;
    Elem from_digits(const std::vector<int>& d) const;
    std::string display(Elem a) const;  // "0", "1", "t", "t^2", ...

    Elem trace_to_subfield(Elem x) const;
    const std::vector<Elem>& subfield() const { return subfield_; }  // sorted ids
    bool in_subfield(Elem x) const;

    // [0] is M_1, ..., [t-1] is M_t = M = ker(trace)
    const std::vector<Hyperplane>& hyperplane_orbit() const;
    const Hyperplane& hyperplane(int i) const;  // 1-based orbit index
    std::vector<Elem> scale_hyperplane(const Hyperplane& h, Elem c) const;
    int hyperplane_index(std::vector<Elem> members) const;
    bool hyperplane_contains(int i, Elem a) const;

private:
    Field() = default;
    Elem mul_poly(Elem a, Elem b) const;  // schoolbook multiply + reduce
    void build_tables();
    void build_orbit() const;

    FieldSpec spec_;
    int p_ = 0, e_ = 0, r_ = 0, n_ = 0;
    std::uint32_t q_ = 0, order_ = 0;
    int t_ = 0, t1_ = 0;
    Elem tau_ = 0, theta_ = 0;
    std::vector<Elem> exp_;    // exp_[i] = tau^i, size order-1
    std::vector<int> log_;     // log_[a], -1 for 0
    std::vector<Elem> subfield_;

    // lazy: hyperplanes are only materialized when asked for
    mutable std::vector<Hyperplane> orbit_;
    mutable std::map<std::vector<Elem>, int> orbit_lookup_;
    mutable std::vector<std::uint8_t> orbit_member_;  // (i-1)*order+a bitmap
};

bool is_prime(long long v);
// q = p^e decomposition; false when q is not a prime power
bool prime_power(long long q, long long& p, int& e);

}  // namespace ddg
