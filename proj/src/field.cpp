#include "ddgraph/field.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace ddg {

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool prime_power(long long q, long long& p, int& e) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            e = 0;
            while (q > 1) {
                if (q % d != 0) return false;
                q /= d;
                ++e;
            }
            return true;
        }
    }
    p = q;
    e = 1;
    return true;
}

namespace {

// little-endian coefficient vectors over GF(p)
using Poly = std::vector<int>;

int pdeg(const Poly& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly pmod(Poly a, const Poly& b, int p) {
    int db = pdeg(b);
    assert(db >= 0);
    int binv_lead = 1;
    for (int x = 1; x < p; ++x)
        if (x * b[db] % p == 1) binv_lead = x;
    for (int da = pdeg(a); da >= db; da = pdeg(a)) {
        int c = a[da] * binv_lead % p;
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p) % p;
    }
    return a;
}

bool irreducible(const Poly& f, int p) {
    int n = pdeg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    // trial division by every monic polynomial of degree 1..n/2
    for (int d = 1; 2 * d <= n; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long id = 0; id < count; ++id) {
            Poly g(d + 1, 0);
            long long v = id;
            for (int i = 0; i < d; ++i) {
                g[i] = (int)(v % p);
                v /= p;
            }
            g[d] = 1;
            if (pdeg(pmod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<long long> prime_factors(long long v) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

Elem Field::mul_poly(Elem a, Elem b) const {
    std::vector<int> da = digits(a), db = digits(b);
    std::vector<int> prod(2 * n_, 0);
    for (int i = 0; i < n_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < n_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    const std::vector<int>& m = spec_.modulus;
    for (int k = 2 * n_ - 1; k >= n_; --k) {
        int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i <= n_; ++i)
            prod[k - n_ + i] = ((prod[k - n_ + i] - c * m[i]) % p_ + p_) % p_;
    }
    prod.resize(n_);
    return from_digits(prod);
}

Field Field::build(const FieldSpec& spec) {
    Field f;
    f.spec_ = spec;
    require(is_prime(spec.p), "NotPrime", "p = " + std::to_string(spec.p) + " is not prime");
    require(spec.e >= 1, "MalformedInput", "e must be positive");
    require(spec.r > 1, "MalformedInput", "r must be > 1");
    f.p_ = spec.p;
    f.e_ = spec.e;
    f.r_ = spec.r;
    f.n_ = spec.e * spec.r;
    long long order = 1;
    for (int i = 0; i < f.n_; ++i) {
        order *= spec.p;
        require(order <= (long long)kMaxFieldOrder, "DegreeTooLarge",
                "field order exceeds 2^16 cap");
    }
    f.order_ = (std::uint32_t)order;
    long long q = 1;
    for (int i = 0; i < spec.e; ++i) q *= spec.p;
    f.q_ = (std::uint32_t)q;
    f.t_ = (int)((order - 1) / (q - 1));
    long long qr1 = 1;
    for (int i = 0; i < spec.r - 1; ++i) qr1 *= q;
    f.t1_ = (int)((qr1 - 1) / (q - 1));

    if (!spec.modulus.empty()) {
        require((int)spec.modulus.size() == f.n_ + 1, "MalformedInput",
                "modulus must have degree e*r");
        for (int c : spec.modulus)
            require(c >= 0 && c < spec.p, "MalformedInput", "modulus coefficient out of range");
        require(spec.modulus.back() == 1, "MalformedInput", "modulus must be monic");
        require(irreducible(spec.modulus, spec.p), "NotIrreducible",
                "modulus is reducible over GF(p)");
        f.spec_.modulus = spec.modulus;
    } else {
        // least monic irreducible (by little-endian value) whose root x is
        // primitive; scan constant-upward so the choice is reproducible
        bool found = false;
        for (long long id = 0; id < order && !found; ++id) {
            Poly cand(f.n_ + 1, 0);
            long long v = id;
            for (int i = 0; i < f.n_; ++i) {
                cand[i] = (int)(v % spec.p);
                v /= spec.p;
            }
            cand[f.n_] = 1;
            if (!irreducible(cand, spec.p)) continue;
            f.spec_.modulus = cand;
            // multiplicative order of x: full iff x^((Q-1)/l) != 1 for all prime l
            Elem x = (Elem)spec.p;  // digits (0,1,0,...)
            bool primitive = true;
            for (long long l : prime_factors(order - 1)) {
                Elem acc = 1, base = x;
                long long k = (order - 1) / l;
                while (k > 0) {
                    if (k & 1) acc = f.mul_poly(acc, base);
                    base = f.mul_poly(base, base);
                    k >>= 1;
                }
                if (acc == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) found = true;
        }
        require(found, "NotIrreducible", "no suitable modulus found");
    }

    f.build_tables();
    return f;
}

void Field::build_tables() {
    // tau: least element id with full multiplicative order
    tau_ = 0;
    for (Elem a = 1; a < order_ && tau_ == 0; ++a) {
        bool full = true;
        for (long long l : prime_factors(order_ - 1)) {
            Elem acc = 1, base = a;
            long long k = (long long)(order_ - 1) / l;
            while (k > 0) {
                if (k & 1) acc = mul_poly(acc, base);
                base = mul_poly(base, base);
                k >>= 1;
            }
            if (acc == 1) {
                full = false;
                break;
            }
        }
        if (full) tau_ = a;
    }
    require(tau_ != 0, "NotIrreducible", "no primitive element found (modulus not irreducible?)");

    exp_.assign(order_ - 1, 0);
    log_.assign(order_, -1);
    Elem cur = 1;
    for (std::uint32_t i = 0; i < order_ - 1; ++i) {
        exp_[i] = cur;
        require(log_[cur] == -1, "NotIrreducible",
                "powers of tau repeat early (modulus not irreducible?)");
        log_[cur] = (int)i;
        cur = mul_poly(cur, tau_);
    }
    require(cur == 1, "NotIrreducible", "tau order is not field order - 1");

    theta_ = exp_[(std::uint32_t)((long long)(q_ - 1) % (order_ - 1))];

    subfield_.clear();
    subfield_.push_back(0);
    for (std::uint32_t j = 0; j + 1 < q_; ++j)
        subfield_.push_back(exp_[(std::uint32_t)((long long)j * t_ % (order_ - 1))]);
    std::sort(subfield_.begin(), subfield_.end());
    assert(subfield_.size() == q_);
    // must be closed under addition (it is the unique subfield of size q)
    for (Elem a : subfield_)
        for (Elem b : subfield_)
            require(in_subfield(add(a, b)), "NotIrreducible", "subfield not closed under +");
}

std::vector<int> Field::digits(Elem a) const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) {
        out[i] = (int)(a % p_);
        a /= p_;
    }
    return out;
}

Elem Field::from_digits(const std::vector<int>& d) const {
    Elem a = 0;
    for (int i = n_ - 1; i >= 0; --i) a = a * p_ + (Elem)d[i];
    return a;
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    Elem out = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        out += mult * (Elem)(((a % p_) + (b % p_)) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    Elem out = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        out += mult * (Elem)((p_ - (a % p_)) % p_);
        a /= p_;
        mult *= p_;
    }
    return out;
}

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint32_t)(((long long)log_[a] + log_[b]) % (order_ - 1))];
}

Elem Field::inv(Elem a) const {
    require(a != 0, "MalformedInput", "zero has no inverse");
    return exp_[(std::uint32_t)(((long long)(order_ - 1) - log_[a]) % (order_ - 1))];
}

Elem Field::pow(Elem a, long long k) const {
    if (a == 0) {
        require(k > 0, "MalformedInput", "0^k needs k > 0");
        return 0;
    }
    long long m = (long long)order_ - 1;
    long long ex = ((long long)log_[a] % m) * (k % m) % m;
    ex = ((ex % m) + m) % m;
    return exp_[(std::uint32_t)ex];
}

Elem Field::pow_tau(long long i) const {
    long long m = (long long)order_ - 1;
    return exp_[(std::uint32_t)(((i % m) + m) % m)];
}

int Field::log(Elem a) const {
    require(a < order_, "MalformedInput", "element id out of range");
    return log_[a];
}

Elem Field::from_ordinal(int o) const {
    require(o >= 0 && o < (int)order_, "MalformedInput", "ordinal out of range");
    return o == 0 ? 0 : exp_[o - 1];
}

std::string Field::display(Elem a) const {
    if (a == 0) return "0";
    int l = log(a);
    if (l == 0) return "1";
    if (l == 1) return "tau";
    std::ostringstream os;
    os << "tau^" << l;
    return os.str();
}

Elem Field::trace_to_subfield(Elem x) const {
    Elem s = 0;
    long long qe = 1;
    for (int i = 0; i < r_; ++i) {
        s = add(s, pow(x, qe));
        qe *= q_;
    }
    require(in_subfield(s), "NotIrreducible", "trace fell outside the subfield");
    return s;
}

bool Field::in_subfield(Elem x) const {
    return std::binary_search(subfield_.begin(), subfield_.end(), x);
}

void Field::build_orbit() const {
    if (!orbit_.empty()) return;
    std::vector<Elem> base;
    for (Elem a = 0; a < order_; ++a) {
        Elem s = 0;
        long long qe = 1;
        for (int i = 0; i < r_; ++i) {
            s = add(s, pow(a, qe));
            qe *= q_;
        }
        if (s == 0) base.push_back(a);
    }
    std::uint32_t expect = order_ / q_;
    require(base.size() == expect, "OrbitDegenerate", "trace kernel has wrong size");

    auto ord_less = [this](Elem a, Elem b) { return ordinal(a) < ordinal(b); };
    bool bitmap_ok = (long long)t_ * order_ <= (1ll << 24);
    if (bitmap_ok) orbit_member_.assign((std::size_t)t_ * order_, 0);
    orbit_.reserve(t_);
    for (int i = 1; i <= t_; ++i) {
        Hyperplane h;
        h.index = i;
        h.members.reserve(base.size());
        Elem ti = pow_tau(i);
        for (Elem m : base) h.members.push_back(mul(m, ti));
        std::sort(h.members.begin(), h.members.end(), ord_less);
        auto ins = orbit_lookup_.emplace(h.members, i);
        require(ins.second, "OrbitDegenerate", "hyperplane orbit members repeat");
        if (bitmap_ok)
            for (Elem m : h.members) orbit_member_[(std::size_t)(i - 1) * order_ + m] = 1;
        orbit_.push_back(std::move(h));
    }
    // tau^t generates F_q*, which fixes every subspace, so M_t must be M itself
    std::vector<Elem> check = base;
    std::sort(check.begin(), check.end(), ord_less);
    require(orbit_.back().members == check, "OrbitDegenerate", "M_t differs from ker(trace)");
}

const std::vector<Hyperplane>& Field::hyperplane_orbit() const {
    build_orbit();
    return orbit_;
}

const Hyperplane& Field::hyperplane(int i) const {
    build_orbit();
    require(i >= 1 && i <= t_, "MalformedInput", "orbit index out of range");
    return orbit_[i - 1];
}

std::vector<Elem> Field::scale_hyperplane(const Hyperplane& h, Elem c) const {
    require(c != 0, "MalformedInput", "scaling by zero collapses a hyperplane");
    std::vector<Elem> out;
    out.reserve(h.members.size());
    for (Elem m : h.members) out.push_back(mul(m, c));
    std::sort(out.begin(), out.end(),
              [this](Elem a, Elem b) { return ordinal(a) < ordinal(b); });
    return out;
}

int Field::hyperplane_index(std::vector<Elem> members) const {
    build_orbit();
    std::sort(members.begin(), members.end(),
              [this](Elem a, Elem b) { return ordinal(a) < ordinal(b); });
    auto it = orbit_lookup_.find(members);
    require(it != orbit_lookup_.end(), "NotAHyperplane",
            "member set is not one of the orbit hyperplanes");
    return it->second;
}

bool Field::hyperplane_contains(int i, Elem a) const {
    build_orbit();
    require(i >= 1 && i <= t_, "MalformedInput", "orbit index out of range");
    if (!orbit_member_.empty()) return orbit_member_[(std::size_t)(i - 1) * order_ + a] != 0;
    const auto& mem = orbit_[i - 1].members;
    return std::binary_search(mem.begin(), mem.end(), a, [this](Elem x, Elem y) {
        return ordinal(x) < ordinal(y);
    });
}

}  // namespace ddg
