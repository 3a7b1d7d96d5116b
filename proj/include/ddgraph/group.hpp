#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ddgraph/field.hpp"

namespace ddg {

constexpr int kMaxGroupOrder = 5000;

// Generic finite group as a dense multiplication table.
class FiniteGroup {
public:
    static FiniteGroup from_table(int order, std::vector<std::uint16_t> mul,
                                  std::vector<std::string> labels = {});

    int order() const { return order_; }
    int id() const { return id_; }
    int mul(int a, int b) const { return mul_[(std::size_t)a * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int a) const { return labels_[a]; }

    nlohmann::json to_json() const;
    static FiniteGroup from_json(const nlohmann::json& j);

private:
    FiniteGroup() = default;
    int order_ = 0;
    int id_ = 0;
    std::vector<std::uint16_t> mul_;  // row-major order x order
    std::vector<std::uint16_t> inv_;
    std::vector<std::string> labels_;
};

// f^exp composed with translation by alpha; the canonical pair form
struct AffineElement {
    int exp = 0;
    Elem alpha = 0;
    bool operator==(const AffineElement&) const = default;
};

// G = N x| <f> inside the affine group of the field: translations N of order
// q^r extended by the order-t scaling f. Elements indexed exp*order + ordinal.
class AffineGroup {
public:
    static AffineGroup build(const Field& f);

    const Field& field() const { return *field_; }
    const FiniteGroup& table() const { return table_; }
    int order() const { return order_; }

    AffineElement element(int idx) const;
    int index(const AffineElement& a) const;
    AffineElement mul(const AffineElement& x, const AffineElement& y) const;
    AffineElement inv(const AffineElement& x) const;
    std::string label(const AffineElement& a) const;

    // translation subgroup {(0, alpha)}; the first q^r indices
    std::vector<int> subgroup_N() const;
    // the cyclic part {(i, 0)}
    std::vector<int> subgroup_H() const;

private:
    AffineGroup() = default;
    void check(const AffineElement& a) const;

    const Field* field_ = nullptr;
    int order_ = 0;
    FiniteGroup table_ = FiniteGroup::from_table(1, {0}, {"e"});
};

// permutations on {1..d} as 0-based images; cycle text like "(1 2 3)(4 5)"
std::vector<int> parse_cycles(const std::string& text, int d);
std::string cycle_string(const std::vector<int>& perm);

FiniteGroup perm_group_closure(const std::vector<std::vector<int>>& generators);

bool subgroup_test(const FiniteGroup& g, const std::vector<int>& subset);
std::vector<std::vector<int>> right_cosets(const FiniteGroup& g, const std::vector<int>& subgroup);

}  // namespace ddg
