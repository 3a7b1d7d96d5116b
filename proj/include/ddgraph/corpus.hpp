#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ddgraph/construction.hpp"
#include "ddgraph/group.hpp"

namespace ddg {

// one term of a generator word: (generator id 1..4, exponent)
struct Word {
    std::vector<std::pair<int, int>> terms;
};

// grammar: term := "f" "_"? index ("^" int)? ; word := term ("*" term)*
Word parse_word(const std::string& text);

// The order-56 group given by generators f1..f4 with relations
//   f1^7 = f2^2 = f3^2 = f4^2 = e,
//   f2 f1 = f1 f3,  f3 f1 = f1 f4,  f4 f1 = f1 f2 f4,
// realized inside the affine group over the 8-element field. The relations
// pin the modulus to x^3+x+1; all of them are re-verified on every load.
struct WordGroupRealization {
    AffineGroup group;
    std::vector<int> generators;  // indices of f1..f4
};
WordGroupRealization realize_word_group();

int evaluate_word(const FiniteGroup& g, const std::vector<int>& generators, const Word& w);

struct Fixture {
    std::string id;
    FiniteGroup group;
    std::vector<int> set;             // sorted element indices
    std::vector<std::string> words;   // source text for word-based fixtures
};

// ids: "alt4", "s1".."s5"
Fixture load_example(const std::string& id);
const std::vector<std::string>& fixture_ids();

nlohmann::json fixture_json(const Fixture& f);

}  // namespace ddg
