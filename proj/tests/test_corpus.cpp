#include <algorithm>
#include <set>

#include "doctest.h"

#include "ddgraph/checks.hpp"
#include "ddgraph/corpus.hpp"
#include "ddgraph/error.hpp"

using namespace ddg;

TEST_CASE("word grammar") {
    CHECK(parse_word("f1").terms == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(parse_word("f_2").terms == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(parse_word("f1^3").terms == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(parse_word("f_1^4*f2*f_4").terms ==
          std::vector<std::pair<int, int>>{{1, 4}, {2, 1}, {4, 1}});
    CHECK(parse_word(" f1 * f2 ").terms == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});

    CHECK_THROWS_WITH_AS(parse_word(""), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_word("g1"), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_word("f1^"), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_word("f1 f2"), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_word("f1**f2"), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_word("f5"), doctest::Contains("UnknownGenerator"), Error);
    CHECK_THROWS_WITH_AS(parse_word("f0"), doctest::Contains("UnknownGenerator"), Error);
}

TEST_CASE("word group realization satisfies the presentation") {
    const WordGroupRealization& real = realize_word_group();
    const FiniteGroup& g = real.group.table();
    REQUIRE(g.order() == 56);
    REQUIRE(real.generators.size() == 4);
    int f1 = real.generators[0], f2 = real.generators[1];
    int f3 = real.generators[2], f4 = real.generators[3];
    auto pw = [&](int x, int k) {
        int r = g.id();
        for (int i = 0; i < k; ++i) r = g.mul(r, x);
        return r;
    };
    CHECK(pw(f1, 7) == g.id());
    CHECK(pw(f1, 3) != g.id());
    CHECK(pw(f2, 2) == g.id());
    CHECK(pw(f3, 2) == g.id());
    CHECK(pw(f4, 2) == g.id());
    CHECK(g.mul(f2, f1) == g.mul(f1, f3));
    CHECK(g.mul(f3, f1) == g.mul(f1, f4));
    CHECK(g.mul(f4, f1) == g.mul(g.mul(f1, f2), f4));
    // the four generators generate: N = <f2,f3,f4> has order 8, extended by f1
    std::set<int> closure{g.id()};
    std::vector<int> frontier{g.id()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int s : real.generators) {
                int y = g.mul(x, s);
                if (closure.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    CHECK((int)closure.size() == 56);

    CHECK(evaluate_word(g, real.generators, parse_word("f1^7")) == g.id());
    CHECK(evaluate_word(g, real.generators, parse_word("f2*f2")) == g.id());
    CHECK(evaluate_word(g, real.generators, parse_word("f2*f1")) ==
          evaluate_word(g, real.generators, parse_word("f1*f3")));
    CHECK(evaluate_word(g, real.generators, parse_word("f_1^4*f2")) ==
          g.mul(pw(f1, 4), f2));
}

TEST_CASE("fixture inventory") {
    CHECK(fixture_ids() ==
          std::vector<std::string>{"alt4", "s1", "s2", "s3", "s4", "s5"});
    CHECK_THROWS_WITH_AS(load_example("nope"), doctest::Contains("MalformedInput"), Error);
}

TEST_CASE("permutation fixture") {
    Fixture a = load_example("alt4");
    CHECK(a.group.order() == 12);
    CHECK(a.set.size() == 6);
    CHECK(a.words.size() == 6);  // cycle notation doubles as the word list here
    std::set<std::string> labels;
    for (int v : a.set) labels.insert(a.group.label(v));
    CHECK(labels == std::set<std::string>(a.words.begin(), a.words.end()));
    CHECK(labels == std::set<std::string>{"(1 3)(2 4)", "(1 2)(3 4)", "(1 2 3)", "(1 3 2)",
                                          "(2 3 4)", "(2 4 3)"});
    // even permutations only: identity, double transpositions, 3-cycles
    for (int i = 0; i < a.group.order(); ++i) {
        const std::string& l = a.group.label(i);
        long parens = std::count(l.begin(), l.end(), '(');
        bool three_cycle = parens == 1 && std::count(l.begin(), l.end(), ' ') == 2;
        CHECK((l == "e" || parens == 2 || three_cycle));
    }
}

TEST_CASE("word fixtures hold 28 distinct involution-closed non-identity elements") {
    for (const std::string& id : {"s1", "s2", "s3", "s4", "s5"}) {
        Fixture fx = load_example(id);
        CAPTURE(id);
        CHECK(fx.group.order() == 56);
        REQUIRE(fx.set.size() == 28);
        CHECK(fx.words.size() == 28);
        CHECK(std::is_sorted(fx.set.begin(), fx.set.end()));
        std::set<int> uniq(fx.set.begin(), fx.set.end());
        CHECK(uniq.size() == 28);
        CHECK(uniq.count(fx.group.id()) == 0);
        for (int v : fx.set) CHECK(uniq.count(fx.group.inv(v)) == 1);

        // the stored set is exactly the evaluation of the stored words
        const WordGroupRealization& real = realize_word_group();
        std::set<int> eval;
        for (const std::string& w : fx.words)
            eval.insert(evaluate_word(fx.group, real.generators, parse_word(w)));
        CHECK(eval == uniq);
    }
}

TEST_CASE("fixture export schema") {
    nlohmann::json j = fixture_json(load_example("s1"));
    CHECK(j["id"] == "s1");
    CHECK(j["order"] == 56);
    REQUIRE(j["set"].is_array());
    REQUIRE(j["set_labels"].is_array());
    CHECK(j["set"].size() == 28);
    CHECK(j["set_labels"].size() == 28);
    CHECK(j["words"].size() == 28);
    REQUIRE(j["group"].is_object());
    FiniteGroup back = FiniteGroup::from_json(j["group"]);
    CHECK(back.order() == 56);
    for (std::size_t i = 0; i < j["set"].size(); ++i)
        CHECK(j["set_labels"][i] == back.label(j["set"][i].get<int>()));

    nlohmann::json ja = fixture_json(load_example("alt4"));
    CHECK(ja["order"] == 12);
    CHECK(ja["set"].size() == 6);
}
