#include "ddgraph/group.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <sstream>

namespace ddg {

FiniteGroup FiniteGroup::from_table(int order, std::vector<std::uint16_t> mul,
                                    std::vector<std::string> labels) {
    require(order >= 1, "MalformedInput", "group order must be positive");
    require(order <= kMaxGroupOrder, "OrderTooLarge",
            "group order " + std::to_string(order) + " exceeds cap " +
                std::to_string(kMaxGroupOrder));
    require(mul.size() == (std::size_t)order * order, "MalformedInput",
            "multiplication table has wrong size");
    for (std::uint16_t v : mul)
        require(v < order, "MalformedInput", "table entry out of range");

    FiniteGroup g;
    g.order_ = order;
    g.mul_ = std::move(mul);

    // Latin square: every row and column is a permutation
    std::vector<char> seen(order);
    for (int a = 0; a < order; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < order; ++b) seen[g.mul(a, b)] = 1;
        require(std::find(seen.begin(), seen.end(), 0) == seen.end(), "MalformedInput",
                "table row is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < order; ++b) seen[g.mul(b, a)] = 1;
        require(std::find(seen.begin(), seen.end(), 0) == seen.end(), "MalformedInput",
                "table column is not a permutation");
    }

    g.id_ = -1;
    for (int e = 0; e < order && g.id_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a)
            ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) g.id_ = e;
    }
    require(g.id_ >= 0, "MalformedInput", "table has no two-sided identity");

    g.inv_.assign(order, 0);
    for (int a = 0; a < order; ++a) {
        int b = -1;
        for (int c = 0; c < order; ++c)
            if (g.mul(a, c) == g.id_) b = c;
        require(b >= 0 && g.mul(b, a) == g.id_, "MalformedInput", "element has no inverse");
        g.inv_[a] = (std::uint16_t)b;
    }

    if (order <= 200) {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    require(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), "MalformedInput",
                            "table is not associative");
    } else {
        std::uint64_t s = 0x2545F4914F6CDD1Dull;
        for (int i = 0; i < 200000; ++i) {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            int a = (int)(s % order);
            int b = (int)((s >> 20) % order);
            int c = (int)((s >> 40) % order);
            require(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), "MalformedInput",
                    "table is not associative");
        }
    }

    if (labels.empty()) {
        labels.reserve(order);
        for (int i = 0; i < order; ++i) labels.push_back("g" + std::to_string(i));
    }
    require((int)labels.size() == order, "MalformedInput", "label count mismatch");
    g.labels_ = std::move(labels);
    return g;
}

nlohmann::json FiniteGroup::to_json() const {
    nlohmann::json j;
    j["order"] = order_;
    j["mul"] = mul_;
    j["labels"] = labels_;
    return j;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("order") && j.contains("mul"), "MalformedInput",
            "group JSON needs order and mul");
    require(j["order"].is_number_integer(), "MalformedInput", "order must be an integer");
    int order = j["order"].get<int>();
    require(j["mul"].is_array(), "MalformedInput", "mul must be an array");
    std::vector<std::uint16_t> mul;
    mul.reserve(j["mul"].size());
    for (const auto& v : j["mul"]) {
        require(v.is_number_integer(), "MalformedInput", "mul entries must be integers");
        long long x = v.get<long long>();
        require(x >= 0 && x < (long long)order, "MalformedInput", "mul entry out of range");
        mul.push_back((std::uint16_t)x);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        require(j["labels"].is_array(), "MalformedInput", "labels must be an array");
        for (const auto& v : j["labels"]) {
            require(v.is_string(), "MalformedInput", "labels must be strings");
            labels.push_back(v.get<std::string>());
        }
    }
    return from_table(order, std::move(mul), std::move(labels));
}

void AffineGroup::check(const AffineElement& a) const {
    require(a.exp >= 0 && a.exp < field_->t() && a.alpha < field_->order(), "FieldMismatch",
            "element does not belong to this group's field");
}

AffineGroup AffineGroup::build(const Field& f) {
    AffineGroup g;
    g.field_ = &f;
    long long order = (long long)f.t() * f.order();
    require(order <= kMaxGroupOrder, "OrderTooLarge",
            "affine group order " + std::to_string(order) + " exceeds cap");
    g.order_ = (int)order;

    std::vector<std::uint16_t> mul((std::size_t)order * order);
    std::vector<std::string> labels((std::size_t)order);
    for (int xi = 0; xi < order; ++xi) {
        AffineElement x = {xi / (int)f.order(), f.from_ordinal(xi % (int)f.order())};
        labels[xi] = g.label(x);
        for (int yi = 0; yi < order; ++yi) {
            AffineElement y = {yi / (int)f.order(), f.from_ordinal(yi % (int)f.order())};
            mul[(std::size_t)xi * order + yi] = (std::uint16_t)g.index(g.mul(x, y));
        }
    }
    g.table_ = FiniteGroup::from_table((int)order, std::move(mul), std::move(labels));
    require(g.table_.id() == 0, "MalformedInput", "identity must sit at index 0");
    return g;
}

AffineElement AffineGroup::element(int idx) const {
    require(idx >= 0 && idx < order_, "MalformedInput", "group index out of range");
    return {idx / (int)field_->order(), field_->from_ordinal(idx % (int)field_->order())};
}

int AffineGroup::index(const AffineElement& a) const {
    check(a);
    return a.exp * (int)field_->order() + field_->ordinal(a.alpha);
}

AffineElement AffineGroup::mul(const AffineElement& x, const AffineElement& y) const {
    check(x);
    check(y);
    const Field& f = *field_;
    // (i,alpha)(j,beta) = (i+j, theta^-j alpha + beta), from the 2x2 matrix form
    Elem thmj = f.pow_tau(-(long long)(f.q() - 1) * y.exp);
    return {(x.exp + y.exp) % f.t(), f.add(f.mul(thmj, x.alpha), y.alpha)};
}

AffineElement AffineGroup::inv(const AffineElement& x) const {
    check(x);
    const Field& f = *field_;
    Elem thi = f.pow_tau((long long)(f.q() - 1) * x.exp);
    return {(f.t() - x.exp) % f.t(), f.neg(f.mul(thi, x.alpha))};
}

std::string AffineGroup::label(const AffineElement& a) const {
    check(a);
    if (a.exp == 0 && a.alpha == 0) return "e";
    std::ostringstream os;
    if (a.exp == 1) os << "f";
    else if (a.exp > 1) os << "f^" << a.exp;
    if (a.alpha != 0) {
        if (a.exp > 0) os << " ";
        os << "a(" << field_->display(a.alpha) << ")";
    }
    return os.str();
}

std::vector<int> AffineGroup::subgroup_N() const {
    std::vector<int> out((std::size_t)field_->order());
    for (int i = 0; i < (int)field_->order(); ++i) out[i] = i;
    return out;
}

std::vector<int> AffineGroup::subgroup_H() const {
    std::vector<int> out(field_->t());
    for (int i = 0; i < field_->t(); ++i) out[i] = i * (int)field_->order();
    return out;
}

std::vector<int> parse_cycles(const std::string& text, int d) {
    require(d >= 1, "MalformedInput", "degree must be positive");
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    skip_ws();
    if (pos < text.size() && (text[pos] == 'e' || text.compare(pos, 2, "()") == 0)) {
        pos += text[pos] == 'e' ? 1 : 2;
        skip_ws();
        require(pos == text.size(), "MalformedInput", "trailing text after identity");
        return perm;
    }
    std::vector<char> used(d, 0);
    bool any = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        require(text[pos] == '(', "MalformedInput", "expected '(' in cycle notation");
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            require(pos < text.size(), "MalformedInput", "unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            require(std::isdigit((unsigned char)text[pos]), "MalformedInput",
                    "expected point number in cycle");
            int v = 0;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
                v = v * 10 + (text[pos++] - '0');
            require(v >= 1 && v <= d, "MalformedInput",
                    "point " + std::to_string(v) + " outside 1.." + std::to_string(d));
            require(!used[v - 1], "MalformedInput", "point repeated across cycles");
            used[v - 1] = 1;
            cyc.push_back(v - 1);
        }
        require(!cyc.empty(), "MalformedInput", "empty cycle");
        for (std::size_t i = 0; i < cyc.size(); ++i)
            perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
        any = true;
    }
    require(any, "MalformedInput", "no cycles found");
    return perm;
}

std::string cycle_string(const std::vector<int>& perm) {
    int d = (int)perm.size();
    std::vector<char> vis(d, 0);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < d; ++i) {
        if (vis[i] || perm[i] == i) continue;
        os << '(';
        int j = i;
        bool first = true;
        while (!vis[j]) {
            vis[j] = 1;
            if (!first) os << ' ';
            os << (j + 1);
            first = false;
            j = perm[j];
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "e";
}

FiniteGroup perm_group_closure(const std::vector<std::vector<int>>& generators) {
    require(!generators.empty(), "MalformedInput", "need at least one generator");
    int d = (int)generators[0].size();
    for (const auto& g : generators) {
        require((int)g.size() == d, "MalformedInput", "generators act on different point sets");
        std::vector<char> seen(d, 0);
        for (int v : g) {
            require(v >= 0 && v < d && !seen[v], "MalformedInput", "generator is not a bijection");
            seen[v] = 1;
        }
    }

    std::vector<int> idperm(d);
    for (int i = 0; i < d; ++i) idperm[i] = i;
    std::vector<std::vector<int>> els{idperm};
    std::map<std::vector<int>, int> idx{{idperm, 0}};
    for (std::size_t head = 0; head < els.size(); ++head) {
        std::vector<int> g = els[head];  // copy: els may reallocate
        for (const auto& s : generators) {
            std::vector<int> pr(d);
            for (int i = 0; i < d; ++i) pr[i] = s[g[i]];  // apply g, then s
            if (idx.emplace(pr, (int)els.size()).second) {
                els.push_back(pr);
                require((int)els.size() <= kMaxGroupOrder, "ClosureTooLarge",
                        "closure exceeds group order cap");
            }
        }
    }

    int order = (int)els.size();
    std::vector<std::uint16_t> mul((std::size_t)order * order);
    std::vector<std::string> labels(order);
    for (int a = 0; a < order; ++a) {
        labels[a] = cycle_string(els[a]);
        for (int b = 0; b < order; ++b) {
            std::vector<int> pr(d);
            for (int i = 0; i < d; ++i) pr[i] = els[b][els[a][i]];
            mul[(std::size_t)a * order + b] = (std::uint16_t)idx.at(pr);
        }
    }
    return FiniteGroup::from_table(order, std::move(mul), std::move(labels));
}

bool subgroup_test(const FiniteGroup& g, const std::vector<int>& subset) {
    std::vector<char> in(g.order(), 0);
    for (int v : subset) {
        if (v < 0 || v >= g.order()) return false;
        in[v] = 1;
    }
    if (!in[g.id()]) return false;
    for (int a : subset) {
        if (!in[g.inv(a)]) return false;
        for (int b : subset)
            if (!in[g.mul(a, b)]) return false;
    }
    return true;
}

std::vector<std::vector<int>> right_cosets(const FiniteGroup& g, const std::vector<int>& subgroup) {
    require(subgroup_test(g, subgroup), "NotASubgroup", "subset is not a subgroup");
    std::vector<int> sub = subgroup;
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    std::vector<char> covered(g.order(), 0);
    std::vector<std::vector<int>> out;
    for (int rep = 0; rep < g.order(); ++rep) {
        if (covered[rep]) continue;
        std::vector<int> coset;
        coset.reserve(sub.size());
        for (int n : sub) {
            int x = g.mul(n, rep);
            require(!covered[x], "NotASubgroup", "cosets overlap");
            covered[x] = 1;
            coset.push_back(x);
        }
        std::sort(coset.begin(), coset.end());
        out.push_back(std::move(coset));
    }
    return out;
}

}  // namespace ddg
