#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "ddgraph/construction.hpp"
#include "ddgraph/error.hpp"

using namespace ddg;

namespace {

Field make_field(int p, int e, int r) {
    FieldSpec s;
    s.p = p;
    s.e = e;
    s.r = r;
    return Field::build(s);
}

// independent congruence form of the condition: phi(t-i) = phi(i) + (q-1)i
// modulo t, with index 0 read as t
bool congruence_ok(int q, int t, const Phi& phi) {
    for (int i = 1; i <= t; ++i) {
        int j = (t - i) % t == 0 ? t : (t - i) % t;
        if (((phi[j - 1] - phi[i - 1] - (q - 1) * i) % t + t) % t != 0) return false;
    }
    return true;
}

std::vector<Phi> all_perms(int t) {
    Phi p(t);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Phi> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST_CASE("is_bijection") {
    CHECK(is_bijection({1, 2, 3}, 3));
    CHECK(is_bijection({3, 1, 2}, 3));
    CHECK_FALSE(is_bijection({1, 1, 3}, 3));
    CHECK_FALSE(is_bijection({1, 2}, 3));
    CHECK_FALSE(is_bijection({0, 1, 2}, 3));
    CHECK_FALSE(is_bijection({1, 2, 4}, 3));
}

TEST_CASE("condition holds exactly for scaled-orbit matches") {
    Field f = make_field(2, 1, 2);
    CHECK(symmetry_condition_check(f, {1, 2, 3}).ok);
    CHECK(symmetry_condition_check(f, {2, 3, 1}).ok);
    CHECK(symmetry_condition_check(f, {3, 1, 2}).ok);
    ConditionResult bad = symmetry_condition_check(f, {1, 3, 2});
    CHECK_FALSE(bad.ok);
    CHECK(bad.first_failing == 1);
    CHECK_FALSE(symmetry_condition_check(f, {2, 1, 3}).ok);
    CHECK_FALSE(symmetry_condition_check(f, {3, 2, 1}).ok);
    CHECK_THROWS_WITH_AS(symmetry_condition_check(f, {1, 2}), doctest::Contains("WrongLength"),
                         Error);
    CHECK_THROWS_AS(symmetry_condition_check(f, {1, 1, 2}), Error);

    Field f8 = make_field(2, 1, 3);
    CHECK_FALSE(symmetry_condition_check(f8, {1, 2, 3, 4, 5, 6, 7}).ok);
    CHECK(symmetry_condition_check(f8, {1, 3, 4, 7, 5, 2, 6}).ok);
}

TEST_CASE("condition agrees with the congruence form on every permutation") {
    struct Inst {
        int p, e, r;
    };
    for (Inst in : {Inst{2, 1, 2}, Inst{3, 1, 2}, Inst{2, 2, 2}, Inst{5, 1, 2}}) {
        Field f = make_field(in.p, in.e, in.r);
        int valid = 0;
        for (const Phi& p : all_perms(f.t())) {
            bool got = symmetry_condition_check(f, p).ok;
            CHECK(got == congruence_ok((int)f.q(), f.t(), p));
            valid += got;
        }
        CAPTURE(f.t());
        CHECK(valid == (int)enumerate_symmetric_permutations(f, true).size());
    }

    // t = 7 is too big to sweep; sample
    Field f8 = make_field(2, 1, 3);
    std::mt19937 rng(20240901);
    Phi p(7);
    std::iota(p.begin(), p.end(), 1);
    for (int it = 0; it < 200; ++it) {
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(symmetry_condition_check(f8, p).ok == congruence_ok(2, 7, p));
    }
}

TEST_CASE("enumeration counts and translation orbits") {
    struct Row {
        int p, e, r, anchored, raw;
    };
    for (Row row : {Row{2, 1, 2, 1, 3}, Row{3, 1, 2, 2, 8}, Row{2, 2, 2, 1, 5},
                    Row{5, 1, 2, 6, 36}, Row{2, 1, 3, 3, 21}}) {
        Field f = make_field(row.p, row.e, row.r);
        std::vector<Phi> anchored = enumerate_symmetric_permutations(f);
        std::vector<Phi> raw = enumerate_symmetric_permutations(f, true);
        CAPTURE(f.t());
        CHECK((int)anchored.size() == row.anchored);
        CHECK((int)raw.size() == row.raw);
        CHECK(std::is_sorted(anchored.begin(), anchored.end()));
        CHECK(std::is_sorted(raw.begin(), raw.end()));
        for (const Phi& p : anchored) CHECK(p[0] == 1);
        // raw is exactly the union of value translations of the anchored reps
        std::set<Phi> expect;
        int t = f.t();
        for (const Phi& p : anchored)
            for (int s = 0; s < t; ++s) {
                Phi q(t);
                for (int i = 0; i < t; ++i) q[i] = (p[i] - 1 + s) % t + 1;
                expect.insert(q);
            }
        CHECK(std::set<Phi>(raw.begin(), raw.end()) == expect);
    }

    CHECK(enumerate_symmetric_permutations(make_field(2, 1, 2)) ==
          std::vector<Phi>{{1, 2, 3}});
    CHECK(enumerate_symmetric_permutations(make_field(3, 1, 2)) ==
          std::vector<Phi>{{1, 2, 3, 4}, {1, 4, 3, 2}});
    CHECK(enumerate_symmetric_permutations(make_field(2, 1, 3)) ==
          std::vector<Phi>{{1, 3, 4, 7, 5, 2, 6}, {1, 4, 7, 3, 6, 2, 5}, {1, 5, 3, 6, 7, 2, 4}});

    // t = 15 exceeds the enumeration cap
    CHECK_THROWS_WITH_AS(enumerate_symmetric_permutations(make_field(2, 1, 4)),
                         doctest::Contains("TTooLarge"), Error);
}

TEST_CASE("closed-form seed permutation") {
    CHECK(closed_form_permutation(3).phi == Phi{1, 2, 3});
    CHECK_FALSE(closed_form_permutation(3).fallback);
    CHECK(closed_form_permutation(5).phi == Phi{1, 4, 2, 5, 3});
    CHECK(closed_form_permutation(7).phi == Phi{1, 6, 4, 2, 7, 5, 3});
    CHECK(closed_form_permutation(6).phi == Phi{1, 5, 2, 3, 4, 6});
    CHECK_THROWS_WITH_AS(closed_form_permutation(2), doctest::Contains("TNotSupported"), Error);
    // the even pattern degenerates at t = 4; without a field that is an error
    CHECK_THROWS_WITH_AS(closed_form_permutation(4), doctest::Contains("TNotSupported"), Error);

    Field f4 = make_field(2, 1, 2);
    ClosedFormPhi a = closed_form_permutation(3, &f4);
    CHECK(a.phi == Phi{1, 2, 3});
    CHECK_FALSE(a.fallback);

    // where the seed fails validation the lex-least valid permutation steps in
    Field f9 = make_field(3, 1, 2);
    ClosedFormPhi b = closed_form_permutation(4, &f9);
    CHECK(b.fallback);
    CHECK(b.phi == Phi{1, 2, 3, 4});

    Field f16 = make_field(2, 2, 2);
    ClosedFormPhi c = closed_form_permutation(5, &f16);
    CHECK(c.fallback);
    CHECK(c.phi == Phi{1, 2, 3, 4, 5});

    Field f8 = make_field(2, 1, 3);
    ClosedFormPhi d = closed_form_permutation(7, &f8);
    CHECK(d.fallback);
    CHECK(d.phi == Phi{1, 3, 4, 7, 5, 2, 6});

    Field f25 = make_field(5, 1, 2);
    ClosedFormPhi e = closed_form_permutation(6, &f25);
    CHECK(e.fallback);
    CHECK(e.phi == enumerate_symmetric_permutations(f25).front());

    CHECK_THROWS_WITH_AS(closed_form_permutation(5, &f4), doctest::Contains("WrongLength"),
                         Error);
}

TEST_CASE("generating set layout for the smallest instance") {
    Field f = make_field(2, 1, 2);
    AffineGroup g = AffineGroup::build(f);
    GeneratingSet s = build_generating_set(g, {1, 2, 3});
    CHECK(s.k == 6);
    CHECK(s.elements == std::vector<int>{2, 3, 5, 7, 9, 10});
    CHECK_THROWS_WITH_AS(build_generating_set(g, {1, 2}), doctest::Contains("WrongLength"),
                         Error);
}

TEST_CASE("generating set size, identity freeness, inverse closure") {
    struct Inst {
        int p, e, r;
    };
    for (Inst in : {Inst{2, 1, 2}, Inst{3, 1, 2}, Inst{2, 1, 3}, Inst{2, 2, 2}, Inst{5, 1, 2}}) {
        Field f = make_field(in.p, in.e, in.r);
        AffineGroup g = AffineGroup::build(f);
        long long q = f.q();
        long long expect = f.order() / q * (f.order() - 1);  // q^(r-1) (q^r - 1)
        for (const Phi& phi : enumerate_symmetric_permutations(f)) {
            GeneratingSet s = build_generating_set(g, phi);
            CAPTURE(f.t());
            CHECK(s.k == expect);
            // q^r - q^(r-1) members in each of the t cyclic slices
            std::vector<int> per_exp(f.t(), 0);
            for (int v : s.elements) ++per_exp[v / (int)f.order()];
            for (int c : per_exp) CHECK(c == (int)(f.order() - f.order() / q));
            std::set<int> in_s(s.elements.begin(), s.elements.end());
            CHECK(in_s.count(g.table().id()) == 0);
            for (int v : s.elements) CHECK(in_s.count(g.table().inv(v)) == 1);
        }
    }

    // an invalid phi still produces a set, but not an inverse-closed one
    Field f = make_field(2, 1, 2);
    AffineGroup g = AffineGroup::build(f);
    GeneratingSet s = build_generating_set(g, {1, 3, 2});
    std::set<int> in_s(s.elements.begin(), s.elements.end());
    bool closed = true;
    for (int v : s.elements) closed = closed && in_s.count(g.table().inv(v)) == 1;
    CHECK_FALSE(closed);
}
