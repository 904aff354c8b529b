#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "solvrep/grpalg.hpp"

using namespace solvrep;

namespace {

std::string data(const std::string& name) { return std::string(SOLVREP_DATA_DIR "/") + name; }

std::shared_ptr<const Group> load(const std::string& name) {
    return load_group_file(data(name)).group;
}

AlgebraElement singleton(std::shared_ptr<const Group> g, const std::string& word) {
    return AlgebraElement::of_element(g, g->normalize(g->presentation().parse_word(word)));
}

// (1 + s*w)/2 for a group element w of order 2 (s = +-1).
AlgebraElement e_pm(std::shared_ptr<const Group> g, const std::string& word, int sign) {
    AlgebraElement a = AlgebraElement::unit(g) + singleton(g, word).scale(CycNumber(sign));
    return a.scale(CycNumber(Rational(1, 2)));
}

AlgebraElement random_element(std::mt19937& rng, std::shared_ptr<const Group> g,
                              std::uint64_t m) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
    AlgebraElement a(g, m);
    for (int t = 0; t < 5; ++t)
        a.set_coeff(pick(rng), a.coeff(pick(rng)) + CycNumber(num(rng)));
    return a;
}

} // namespace

TEST_CASE("singleton products follow the group law") {
    auto Q = load("q8.grp");
    CHECK(singleton(Q, "y") * singleton(Q, "z") == singleton(Q, "y z"));
    CHECK(singleton(Q, "z") * singleton(Q, "y") == singleton(Q, "x y z"));
}

TEST_CASE("averaging idempotent of the full group") {
    auto Q = load("q8.grp");
    std::vector<std::size_t> all(Q->order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    AlgebraElement eG = avg_idempotent(Q, all);
    CHECK(eG.is_idempotent());
    CHECK(eG * eG == eG);
}

TEST_CASE("orthogonal pair (1+x)/2, (1-x)/2 in Q[Q8]") {
    auto Q = load("q8.grp");
    AlgebraElement plus = e_pm(Q, "x", +1), minus = e_pm(Q, "x", -1);
    CHECK((plus * minus).is_zero());
    CHECK(plus + minus == AlgebraElement::unit(Q));
    CHECK(plus.is_idempotent());
}

TEST_CASE("class sums") {
    auto S = load("sl23.grp");
    auto classes = S->conjugacy_classes();
    std::size_t t = S->generator(3);
    const std::vector<std::size_t>* t_class = nullptr;
    for (const auto& c : classes)
        if (std::find(c.begin(), c.end(), t) != c.end()) t_class = &c;
    REQUIRE(t_class != nullptr);
    AlgebraElement ct = class_sum(S, *t_class);
    CHECK(ct.term_count() == 4);
    CHECK(ct.is_central());
    for (std::size_t g = 0; g < S->order(); ++g) CHECK(ct.conjugated_by(g) == ct);

    // identity class and a central element class are singletons
    CHECK(class_sum(S, classes[0]) == AlgebraElement::unit(S));
    auto Q = load("q8.grp");
    auto qcls = Q->conjugacy_classes();
    AlgebraElement cx = class_sum(Q, qcls[4]);
    CHECK(cx.term_count() == 1);
    CHECK(cx == singleton(Q, "x"));
}

TEST_CASE("avg_idempotent examples") {
    auto Q = load("q8.grp");
    std::size_t x = Q->generator(0);
    AlgebraElement ex = avg_idempotent(Q, {Q->identity(), x});
    CHECK(ex == e_pm(Q, "x", +1));
    CHECK(ex.is_central()); // <x> is normal (central) in Q8

    CHECK(avg_idempotent(Q, {Q->identity()}) == AlgebraElement::unit(Q));

    auto S = load("sl23.grp");
    AlgebraElement eq8 = avg_idempotent(S, S->level_elements(3));
    CHECK(eq8.is_idempotent());
    CHECK(eq8.is_central()); // Q8 is normal in SL(2,3)

    // order-2 subgroup of S3 generated by the reflection is not normal
    auto S3 = load("s3.grp");
    std::size_t a = S3->generator(1);
    AlgebraElement ea = avg_idempotent(S3, {S3->identity(), a});
    CHECK(ea.is_idempotent());
    CHECK(!ea.is_central());

    CHECK_THROWS_AS(avg_idempotent(Q, {Q->identity(), Q->generator(1)}), NotASubgroup);
}

TEST_CASE("conjugation of algebra elements") {
    auto S = load("sl23.grp");
    std::size_t t = S->generator(3);
    AlgebraElement a = e_pm(S, "x", +1) * e_pm(S, "y", +1) * e_pm(S, "z", -1);
    AlgebraElement expected = e_pm(S, "x", +1) * e_pm(S, "y", -1) * e_pm(S, "z", +1);
    CHECK(a.conjugated_by(t) == expected);
    CHECK(a.conjugated_by(S->identity()) == a);

    // class sums are fixed by conjugation
    auto classes = S->conjugacy_classes();
    for (const auto& c : classes) {
        AlgebraElement cs = class_sum(S, c);
        for (std::size_t g = 0; g < S->order(); ++g) CHECK(cs.conjugated_by(g) == cs);
    }

    // conjugation preserves idempotency and the coefficient multiset
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement r = random_element(rng, S, 12);
        AlgebraElement rc = r.conjugated_by(t);
        std::multiset<std::string> before, after;
        for (const auto& [k, v] : r.terms()) before.insert(v.to_string());
        for (const auto& [k, v] : rc.terms()) after.insert(v.to_string());
        CHECK(before == after);
    }
}

TEST_CASE("is_idempotent / is_central drive the Berman case split") {
    auto S = load("sl23.grp");
    AlgebraElement one = AlgebraElement::unit(S);
    AlgebraElement ex = e_pm(S, "x", +1);
    AlgebraElement case1 = one - ex; // 1 - e_x: central idempotent
    CHECK(case1.is_idempotent());
    CHECK(case1.is_central());

    AlgebraElement case2 = ex * e_pm(S, "y", +1) * e_pm(S, "z", -1);
    CHECK(case2.is_idempotent());
    CHECK(case2.is_central(3));  // central in C[Q8]
    CHECK(!case2.is_central());  // but not in C[SL(2,3)]

    AlgebraElement scaled = case1.scale(CycNumber(Rational(1, 3)));
    CHECK(!scaled.is_idempotent());
}

TEST_CASE("delta decomposition") {
    auto S = load("sl23.grp");
    auto d = delta_decomposition(S);
    CHECK(d.commutative_dimension == 3);
    CHECK(d.has_noncommutative_part);
    CHECK(d.commutative_projector.is_central());
    CHECK(d.commutative_projector.is_idempotent());
    CHECK(d.commutative_projector.term_count() == 8);

    auto C4 = load("c4.grp");
    auto dc = delta_decomposition(C4);
    CHECK(dc.commutative_projector == AlgebraElement::unit(C4));
    CHECK(dc.commutative_dimension == 4);
    CHECK(!dc.has_noncommutative_part);

    auto Q = load("q8.grp");
    auto dq = delta_decomposition(Q);
    CHECK(dq.commutative_projector == e_pm(Q, "x", +1));
    CHECK(dq.commutative_dimension == 4);

    // e_G' commutes with random elements
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        AlgebraElement r = random_element(rng, S, 1);
        CHECK(d.commutative_projector * r == r * d.commutative_projector);
    }
}

TEST_CASE("ring axioms on random samples") {
    auto S = load("sl23.grp");
    std::mt19937 rng(99);
    AlgebraElement one = AlgebraElement::unit(S);
    for (int trial = 0; trial < 40; ++trial) {
        AlgebraElement a = random_element(rng, S, 1);
        AlgebraElement b = random_element(rng, S, 12);
        AlgebraElement c = random_element(rng, S, 1);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * one == a);
        CHECK(one * a == a);
    }
}

TEST_CASE("avg idempotents for every small subgroup of the corpus") {
    for (const char* f : {"q8.grp", "d4.grp", "s3.grp", "a4.grp", "c12.grp"}) {
        auto G = load(f);
        std::set<std::vector<std::size_t>> subgroups;
        // subgroups generated by at most two elements (all of them, at this scale)
        for (std::size_t a = 0; a < G->order(); ++a) {
            for (std::size_t b = 0; b < G->order(); ++b) {
                std::set<std::size_t> s{G->identity(), a, b};
                bool grew = true;
                while (grew) {
                    grew = false;
                    std::vector<std::size_t> cur(s.begin(), s.end());
                    for (auto u : cur)
                        for (auto v : cur)
                            if (s.insert(G->mul(u, v)).second) grew = true;
                }
                subgroups.insert(std::vector<std::size_t>(s.begin(), s.end()));
            }
        }
        for (const auto& H : subgroups) {
            AlgebraElement e = avg_idempotent(G, H);
            CHECK(e.is_idempotent());
        }
    }
}

TEST_CASE("group mismatch is refused") {
    auto Q = load("q8.grp");
    auto S = load("sl23.grp");
    CHECK_THROWS_AS(AlgebraElement::unit(Q) + AlgebraElement::unit(S), GroupMismatch);
}

TEST_CASE("serialization round-trip and determinism") {
    auto S = load("sl23.grp");
    std::mt19937 rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement a = random_element(rng, S, 12);
        CHECK(AlgebraElement::from_string(a.to_string(), S) == a);
        CHECK(a.to_string() == AlgebraElement::from_string(a.to_string(), S).to_string());
    }
}
