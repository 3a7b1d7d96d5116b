#include <numeric>
#include <set>

#include "doctest.h"

#include "ddgraph/checks.hpp"
#include "ddgraph/construction.hpp"
#include "ddgraph/corpus.hpp"
#include "ddgraph/error.hpp"

using namespace ddg;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

FiniteGroup cyclic(int n) {
    std::vector<std::uint16_t> mul((std::size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[(std::size_t)a * n + b] = (std::uint16_t)((a + b) % n);
    return FiniteGroup::from_table(n, std::move(mul));
}

struct Instance {
    Field field;
    AffineGroup group;
    GeneratingSet set;
    Instance(int p, int e, int r, const Phi& phi)
        : field(Field::build({p, e, r, {}})),
          group(AffineGroup::build(field)),
          set(build_generating_set(group, phi)) {}
};

}  // namespace

TEST_CASE("deza parameters on reference graphs") {
    CHECK(deza_check(complete(4)) == DezaParams{4, 3, 2, 2});
    CHECK(deza_check(cycle(5)) == DezaParams{5, 2, 1, 0});
    CHECK(deza_check(Graph(1)) == DezaParams{1, 0, 0, 0});

    Instance smallest(2, 1, 2, {1, 2, 3});
    Graph g = cayley_graph(smallest.group.table(), smallest.set.elements);
    CHECK(deza_check(g) == DezaParams{12, 6, 3, 2});

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_THROWS_WITH_AS(deza_check(path), doctest::Contains("NotRegular"), Error);
    CHECK_THROWS_WITH_AS(deza_check(Graph(0)), doctest::Contains("NotRegular"), Error);

    // triangular prism: common-neighbor counts 0, 1 and 2
    Graph prism(6);
    for (int i : {0, 1, 2}) {
        prism.add_edge(i, (i + 1) % 3);
        prism.add_edge(3 + i, 3 + (i + 1) % 3);
        prism.add_edge(i, 3 + i);
    }
    CHECK_THROWS_WITH_AS(deza_check(prism), doctest::Contains("ThreeOrMoreValues"), Error);
}

TEST_CASE("divisible partition discovery") {
    Instance smallest(2, 1, 2, {1, 2, 3});
    Graph g = cayley_graph(smallest.group.table(), smallest.set.elements);
    DDGResult res = ddg_check(g);
    REQUIRE(res.valid.size() == 1);
    const DDGAssignment& a = res.primary();
    CHECK(a.params == DDGParams{12, 6, 2, 3, 3, 4});
    CHECK_FALSE(a.degenerate);
    CHECK(a.classes == right_cosets(smallest.group.table(), smallest.group.subgroup_N()));

    // complete bipartite: classes are the two sides
    Graph b(6);
    for (int u : {0, 1, 2})
        for (int v : {3, 4, 5}) b.add_edge(u, v);
    DDGResult rb = ddg_check(b);
    CHECK(rb.primary().params == DDGParams{6, 3, 3, 0, 2, 3});
    CHECK(rb.primary().classes ==
          std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
    CHECK_FALSE(rb.primary().degenerate);

    CHECK(ddg_check(cycle(4)).primary().params == DDGParams{4, 2, 2, 0, 2, 2});

    // complete and edgeless graphs only admit the one-class reading
    DDGResult rk = ddg_check(complete(4));
    CHECK(rk.primary().params == DDGParams{4, 3, 2, 2, 1, 4});
    CHECK(rk.primary().degenerate);
    DDGResult re = ddg_check(Graph(4));
    CHECK(re.primary().params == DDGParams{4, 0, 0, 0, 1, 4});
    CHECK(re.primary().degenerate);

    CHECK_THROWS_WITH_AS(ddg_check(cycle(5)), doctest::Contains("NoValidPartition"), Error);
}

TEST_CASE("quotient multiset") {
    FiniteGroup z3 = cyclic(3);
    CHECK(quotient_multiset(z3, {1, 2}) == std::vector<long long>{2, 1, 1});
    CHECK_THROWS_AS(quotient_multiset(z3, {3}), Error);

    Instance smallest(2, 1, 2, {1, 2, 3});
    std::vector<long long> cnt =
        quotient_multiset(smallest.group.table(), smallest.set.elements);
    CHECK(cnt[smallest.group.table().id()] == smallest.set.k);
    long long total = std::accumulate(cnt.begin(), cnt.end(), 0ll);
    CHECK(total == (long long)smallest.set.k * smallest.set.k);
}

TEST_CASE("difference-set counts split over the subgroup") {
    Instance smallest(2, 1, 2, {1, 2, 3});
    DDSResult r = dds_check(smallest.group.table(), smallest.set.elements,
                            smallest.group.subgroup_N());
    CHECK(r.l1 == 2);
    CHECK(r.l2 == 3);

    Fixture alt4 = load_example("alt4");
    std::vector<int> v4;
    for (int i = 0; i < alt4.group.order(); ++i) {
        const std::string& l = alt4.group.label(i);
        if (l == "e" || std::count(l.begin(), l.end(), '(') == 2) v4.push_back(i);
    }
    REQUIRE(v4.size() == 4);
    DDSResult ra = dds_check(alt4.group, alt4.set, v4);
    CHECK(ra.l1 == 2);
    CHECK(ra.l2 == 3);

    FiniteGroup z6 = cyclic(6);
    CHECK_THROWS_WITH_AS(dds_check(z6, {1, 5}, {0, 1}), doctest::Contains("NotASubgroup"),
                         Error);
    CHECK_THROWS_WITH_AS(dds_check(z6, {1, 5}, {0, 3}), doctest::Contains("NotConstantOffN"),
                         Error);
    FiniteGroup z8 = cyclic(8);
    CHECK_THROWS_WITH_AS(dds_check(z8, {1, 2, 6, 7}, {0, 2, 4, 6}),
                         doctest::Contains("NotConstantOnN"), Error);
}

TEST_CASE("subgroup discovery from the set alone") {
    Instance smallest(2, 1, 2, {1, 2, 3});
    DiscoverResult d =
        dds_discover_subgroup(smallest.group.table(), smallest.set.elements);
    CHECK(d.subgroup == smallest.group.subgroup_N());
    CHECK(d.l1 == 2);
    CHECK(d.l2 == 3);

    Fixture alt4 = load_example("alt4");
    DiscoverResult da = dds_discover_subgroup(alt4.group, alt4.set);
    CHECK(da.l1 == 2);
    CHECK(da.l2 == 3);
    std::set<std::string> labels;
    for (int v : da.subgroup) labels.insert(alt4.group.label(v));
    CHECK(labels ==
          std::set<std::string>{"e", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});

    FiniteGroup z6 = cyclic(6);
    DiscoverResult dz = dds_discover_subgroup(z6, {1, 5});
    CHECK(dz.subgroup == std::vector<int>{0, 2, 4});
    CHECK(dz.l1 == 1);
    CHECK(dz.l2 == 0);

    FiniteGroup z8 = cyclic(8);
    CHECK_THROWS_WITH_AS(dds_discover_subgroup(z8, {1, 2, 6, 7}),
                         doctest::Contains("NoSubgroupFound"), Error);
}

TEST_CASE("parameter formulas") {
    CHECK(predicted_params(2, 2) == DDGParams{12, 6, 2, 3, 3, 4});
    CHECK(predicted_params(3, 2) == DDGParams{36, 24, 15, 16, 4, 9});
    CHECK(predicted_params(2, 3) == DDGParams{56, 28, 12, 14, 7, 8});
    CHECK(predicted_params(4, 2) == DDGParams{80, 60, 44, 45, 5, 16});
    CHECK(predicted_params(5, 2) == DDGParams{150, 120, 95, 96, 6, 25});
    CHECK_THROWS_WITH_AS(predicted_params(6, 2), doctest::Contains("NotPrimePower"), Error);
    CHECK_THROWS_AS(predicted_params(4, 1), Error);

    // k^2 = k + l1 (n - 1) + l2 (v - n) must hold for any divisible design
    for (auto [q, r] : std::vector<std::pair<long long, int>>{
             {2, 2}, {3, 2}, {4, 2}, {5, 2}, {7, 2}, {8, 2}, {9, 2}, {2, 3}, {3, 3}, {2, 5}}) {
        DDGParams d = predicted_params(q, r);
        CHECK(d.k * d.k == d.k + d.l1 * (d.n - 1) + d.l2 * (d.v - d.n));
        CHECK(d.v == d.m * d.n);
    }
}

TEST_CASE("set and graph views of an instance agree") {
    for (auto [p, e, r] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {3, 1, 2}, {2, 1, 3}}) {
        Field f = Field::build({p, e, r, {}});
        AffineGroup g = AffineGroup::build(f);
        for (const Phi& phi : enumerate_symmetric_permutations(f)) {
            GeneratingSet s = build_generating_set(g, phi);
            DDSResult ds = dds_check(g.table(), s.elements, g.subgroup_N());
            Graph gr = cayley_graph(g.table(), s.elements);
            DDGResult dg = ddg_check(gr);
            const DDGAssignment& a = dg.primary();
            CAPTURE(f.t());
            CHECK(a.params == predicted_params((long long)f.q(), r));
            CHECK(a.params.l1 == ds.l1);
            CHECK(a.params.l2 == ds.l2);
            CHECK(a.classes == right_cosets(g.table(), g.subgroup_N()));
            CHECK(dds_discover_subgroup(g.table(), s.elements).subgroup == g.subgroup_N());
        }
    }
}
