#include "ddgraph/corpus.hpp"

#include <algorithm>
#include <cctype>

namespace ddg {

Word parse_word(const std::string& text) {
    Word w;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        if (!expect_term) {
            require(text[pos] == '*', "SyntaxError", "expected '*' between terms");
            ++pos;
            skip_ws();
        }
        require(pos < text.size() && text[pos] == 'f', "SyntaxError",
                "expected generator term starting with 'f'");
        ++pos;
        if (pos < text.size() && text[pos] == '_') ++pos;
        require(pos < text.size() && std::isdigit((unsigned char)text[pos]), "SyntaxError",
                "expected generator index");
        int gen = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
            gen = gen * 10 + (text[pos++] - '0');
        require(gen >= 1 && gen <= 4, "UnknownGenerator",
                "generator f" + std::to_string(gen) + " is not one of f1..f4");
        int exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            require(pos < text.size() && std::isdigit((unsigned char)text[pos]), "SyntaxError",
                    "expected exponent after '^'");
            exp = 0;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
                exp = exp * 10 + (text[pos++] - '0');
        }
        w.terms.emplace_back(gen, exp);
        expect_term = false;
    }
    require(!w.terms.empty(), "SyntaxError", "empty word");
    return w;
}

WordGroupRealization realize_word_group() {
    FieldSpec spec;
    spec.p = 2;
    spec.e = 1;
    spec.r = 3;
    spec.modulus = {1, 1, 0, 1};
    static const Field field = Field::build(spec);
    AffineGroup group = AffineGroup::build(field);

    AffineElement f1{1, 0};
    AffineElement f2{0, 1};
    AffineElement f3{0, field.pow_tau(-1)};
    AffineElement f4{0, field.pow_tau(-2)};
    AffineElement e{0, 0};

    auto pw = [&](AffineElement x, int k) {
        AffineElement acc = e;
        for (int i = 0; i < k; ++i) acc = group.mul(acc, x);
        return acc;
    };
    require(pw(f1, 7) == e, "RelationViolated", "f1^7 != e");
    require(pw(f2, 2) == e, "RelationViolated", "f2^2 != e");
    require(pw(f3, 2) == e, "RelationViolated", "f3^2 != e");
    require(pw(f4, 2) == e, "RelationViolated", "f4^2 != e");
    require(group.mul(f2, f1) == group.mul(f1, f3), "RelationViolated", "f2 f1 != f1 f3");
    require(group.mul(f3, f1) == group.mul(f1, f4), "RelationViolated", "f3 f1 != f1 f4");
    require(group.mul(f4, f1) == group.mul(group.mul(f1, f2), f4), "RelationViolated",
            "f4 f1 != f1 f2 f4");

    WordGroupRealization out{std::move(group), {}};
    out.generators = {out.group.index(f1), out.group.index(f2), out.group.index(f3),
                      out.group.index(f4)};
    return out;
}

int evaluate_word(const FiniteGroup& g, const std::vector<int>& generators, const Word& w) {
    int acc = g.id();
    for (auto [gen, exp] : w.terms) {
        require(gen >= 1 && gen <= (int)generators.size(), "UnknownGenerator",
                "generator index out of range");
        for (int i = 0; i < exp; ++i) acc = g.mul(acc, generators[gen - 1]);
    }
    return acc;
}

namespace {

const std::vector<std::string> kAlt4Set = {
    "(1 3)(2 4)", "(1 2)(3 4)", "(1 2 3)", "(1 3 2)", "(2 3 4)", "(2 4 3)",
};

// the five word sets, verbatim (the parser tolerates the f2/f3/f4 spellings)
const std::vector<std::vector<std::string>> kWordSets = {
    {
        "f_3", "f_2*f_3", "f_3*f_4", "f_2*f_3*f_4", "f_1*f_4", "f_1*f_2*f_4",
        "f_1*f_2*f_3*f_4", "f_1*f_3*f_4", "f_1^2*f_2", "f_1^2*f_3", "f_1^2*f_4",
        "f_1^2*f_2*f_3*f_4", "f_1^3*f_2", "f_1^3*f_3", "f_1^3*f_2*f_4", "f_1^3*f_3*f_4",
        "f_1^4*f_2", "f_1^4*f_2*f_3", "f_1^4*f_2*f_4", "f_1^4*f_2*f_3*f_4", "f_1^5*f_2",
        "f_1^5*f_4", "f_1^5*f_2*f_3", "f_1^5*f_3*f_4", "f_1^6*f_3", "f_1^6*f_4",
        "f_1^6*f_2*f_3", "f_1^6*f_2*f_4",
    },
    {
        "f_2", "f_4", "f_2*f_3", "f_3*f_4", "f_1", "f_1*f_3", "f_1*f_4", "f_1*f_3*f_4",
        "f_1^2*f_3", "f_1^2*f_4", "f_1^2*f_2*f_3", "f_1^2*f_2*f_4", "f_1^3", "f_1^3*f_2*f_4",
        "f_1^3*f_3*f_4", "f_1^3*f_2*f_3", "f_1^4", "f_1^4*f_2", "f_1^4*f_4", "f_1^4*f2*f_4",
        "f_1^5*f_2", "f_1^5*f_3", "f_1^5*f_2*f_4", "f_1^5*f_3*f_4", "f_1^6", "f_1^6*f_2",
        "f_1^6*f_3", "f_1^6*f_2*f_3",
    },
    {
        "f_1", "f_3", "f_4", "f_1^2", "f_1*f3", "f_2*f_4", "f_3*f4", "f_1^2*f_2",
        "f_1^2*f_3", "f_1^2*f_4", "f_1*f_2*f_4", "f_1*f_3*f_4", "f_1^3*f_3", "f_1^5",
        "f_1^4*f_2", "f_1^4*f_4", "f_1^3*f_2*f_3", "f_1^3*f_2*f_4", "f_1^3*f_3*f_4", "f_1^6",
        "f_1^5*f_2", "f_1^4*f_2*f_3", "f_1^4*f_2*f_4", "f_1^6*f_2", "f_1^6*f_4",
        "f_1^5*f_2*f_3", "f_1^5*f_3*f_4", "f_1^6*f_2*f_3",
    },
    {
        "f_1", "f_2", "f_3", "f_1*f_3", "f_1*f_4", "f_2*f_4", "f_3*f_4", "f_1^2*f_2",
        "f_1^2*f_3", "f_1^2*f_4", "f_1*f_3*f_4", "f_1^3*f_3", "f_1^4*f_3", "f_1^4*f_4",
        "f_1^3*f_2*f_3", "f_1^3*f_3*f_4", "f_1^2*f_2*f_3*f_4", "f_1^6", "f_1^5*f_2",
        "f_1^5*f_4", "f_1^4*f_2*f_3", "f_1^4*f_2*f_4", "f_1^3*f_2*f_3*f_4", "f_1^6*f_2",
        "f_1^6*f_3", "f_1^5*f_2*f_3", "f_1^5*f_3*f_4", "f_1^6*f_2*f_3",
    },
    {
        "f_1", "f_2", "f_3", "f_4", "f_1^2", "f_1*f_3", "f_1*f_4", "f_1^2*f_4",
        "f_1*f_3*f_4", "f_2*f_3*f_4", "f_1^3*f_3", "f_1^3*f_4", "f_1^2*f_2*f_3", "f_1^5",
        "f_1^4*f_2", "f_1^4*f_4", "f_1^3*f_2*f_3", "f_1^3*f_2*f_4", "f_1^2*f_2*f_3*f_4",
        "f_1^6", "f_1^5*f_2", "f_1^5*f_4", "f_1^4*f_2*f_3", "f_1^4*f_3*f_4", "f_1^6*f_2",
        "f_1^6*f_3", "f_1^5*f_2*f_4", "f_1^6*f_2*f_3",
    },
};

}  // namespace

const std::vector<std::string>& fixture_ids() {
    static const std::vector<std::string> ids = {"alt4", "s1", "s2", "s3", "s4", "s5"};
    return ids;
}

Fixture load_example(const std::string& id) {
    if (id == "alt4") {
        std::vector<std::vector<int>> gens;
        for (const std::string& c : kAlt4Set) gens.push_back(parse_cycles(c, 4));
        FiniteGroup g = perm_group_closure(gens);
        std::vector<int> set;
        for (const auto& p : gens) {
            auto it = std::find(g.labels().begin(), g.labels().end(), cycle_string(p));
            require(it != g.labels().end(), "MalformedInput", "generator missing from closure");
            set.push_back((int)(it - g.labels().begin()));
        }
        std::sort(set.begin(), set.end());
        return {id, std::move(g), std::move(set), kAlt4Set};
    }
    if (id.size() == 2 && id[0] == 's' && id[1] >= '1' && id[1] <= '5') {
        WordGroupRealization real = realize_word_group();
        const std::vector<std::string>& words = kWordSets[id[1] - '1'];
        std::vector<int> set;
        for (const std::string& w : words)
            set.push_back(evaluate_word(real.group.table(), real.generators, parse_word(w)));
        std::sort(set.begin(), set.end());
        require(std::adjacent_find(set.begin(), set.end()) == set.end(), "MalformedInput",
                "word set evaluates to repeated elements");
        require((int)set.size() == 28, "MalformedInput", "word set must have 28 elements");
        require(!std::binary_search(set.begin(), set.end(), real.group.table().id()),
                "MalformedInput", "word set contains the identity");
        return {id, real.group.table(), std::move(set), words};
    }
    fail("MalformedInput", "unknown fixture id '" + id + "'");
}

nlohmann::json fixture_json(const Fixture& f) {
    nlohmann::json j;
    j["id"] = f.id;
    j["order"] = f.group.order();
    j["set"] = f.set;
    nlohmann::json labels = nlohmann::json::array();
    for (int v : f.set) labels.push_back(f.group.label(v));
    j["set_labels"] = std::move(labels);
    if (!f.words.empty()) j["words"] = f.words;
    j["group"] = f.group.to_json();
    return j;
}

}  // namespace ddg
