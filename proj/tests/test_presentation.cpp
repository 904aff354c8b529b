#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "solvrep/presentation.hpp"

using namespace solvrep;

namespace {

std::string data(const std::string& name) { return std::string(SOLVREP_DATA_DIR "/") + name; }

std::shared_ptr<const Group> load(const std::string& name) {
    return load_group_file(data(name)).group;
}

} // namespace

TEST_CASE("parsing the reference files") {
    LongPresentation lp = parse_presentation_file(data("sl23.grp"));
    CHECK(lp.name == "SL23");
    REQUIRE(lp.size() == 4);
    CHECK(lp.generators[0].symbol == "x");
    CHECK(lp.generators[3].prime == 3);
    CHECK(lp.power_words[1].letters ==
          std::vector<std::pair<std::size_t, long>>{{0, 1}}); // y^2 = x
    // defaulted conj lines are trivial
    CHECK(lp.conj_words[3][0].letters ==
          std::vector<std::pair<std::size_t, long>>{{0, 1}}); // t^-1 x t = x

    LongPresentation c3 = parse_presentation("group C3\ngen t prime 3\npow t = 1\n");
    CHECK(c3.size() == 1);
    CHECK(c3.generators[0].prime == 3);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_presentation("group G\ngen a prime 4\npow a = 1\n"), SyntaxError);
    // conj referencing a generator of index >= the conjugator
    CHECK_THROWS_AS(parse_presentation("group G\n"
                                       "gen t prime 3\n"
                                       "gen y prime 2\n"
                                       "gen z prime 2\n"
                                       "pow t = 1\npow y = 1\npow z = 1\n"
                                       "conj y t = z\n"),
                    SyntaxError);
    CHECK_THROWS_AS(parse_presentation("group G\ngen a prime 2\n"), SyntaxError); // no pow
    CHECK_THROWS_AS(parse_presentation("gen a prime 2\npow a = 1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("group G\ngen a prime 2\npow b = 1\n"), SyntaxError);
    // line/column information is carried in the message
    try {
        parse_presentation("group G\ngen a prime 9\npow a = 1\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("validate SL(2,3): order 24, exponent 12") {
    auto rep = load_group_file(data("sl23.grp"));
    CHECK(rep.order == 24);
    CHECK(rep.exponent == 12);
    CHECK(rep.group->levels() == 4);
    CHECK(rep.group->level_order(3) == 8);
}

TEST_CASE("validate C4 tower") {
    auto rep = load_group_file(data("c4.grp"));
    CHECK(rep.order == 4);
    CHECK(rep.exponent == 4);
}

TEST_CASE("inconsistent presentation is rejected") {
    // z^-1 y z = x makes conjugation by z collapse the C4 below it.
    std::string bad = "group BadQ8\n"
                      "gen x prime 2\ngen y prime 2\ngen z prime 2\n"
                      "pow x = 1\npow y = x\npow z = x\n"
                      "conj z y = x\n";
    CHECK_THROWS_AS(validate(parse_presentation(bad)), InconsistentPresentation);
}

TEST_CASE("size cap") {
    std::string big = "group Big\n";
    for (int i = 0; i < 14; ++i) {
        big += "gen g" + std::to_string(i) + " prime 2\n";
        big += "pow g" + std::to_string(i) + " = 1\n";
    }
    CHECK_THROWS_AS(validate(parse_presentation(big)), SizeExceeded);
}

TEST_CASE("normal forms in SL(2,3)") {
    auto G = load("sl23.grp");
    auto nf = [&](const std::string& w) {
        return G->element_word(G->normalize(G->presentation().parse_word(w)));
    };
    CHECK(nf("y y") == "x");
    CHECK(nf("t t t") == "1");
    CHECK(nf("z y") == "x y z");
    CHECK(nf("y z") == "y z");
    CHECK(nf("y^-1") == "x y");
    CHECK(nf("t^-1 y t") == "z");
    CHECK(nf("t^-1 z t") == "y z");
}

TEST_CASE("group operations") {
    auto G = load("sl23.grp");
    std::size_t y = G->generator(1), z = G->generator(2);
    GroupElement yz = G->element(G->mul(y, z));
    CHECK(yz.exps == std::vector<int>{0, 1, 1, 0});
    CHECK(G->inv(y) == G->normalize(G->presentation().parse_word("x y")));
    for (std::size_t g = 0; g < G->order(); ++g) CHECK(G->mul(g, G->inv(g)) == G->identity());
}

TEST_CASE("normalize is a homomorphism on random word pairs") {
    auto G = load("sl23.grp");
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> len(0, 6), gen(0, 3), exp(-4, 4);
    auto random_word = [&] {
        Word w;
        int L = len(rng);
        for (int i = 0; i < L; ++i)
            w.letters.emplace_back(static_cast<std::size_t>(gen(rng)), exp(rng));
        return w;
    };
    for (int trial = 0; trial < 1200; ++trial) {
        Word u = random_word(), v = random_word();
        Word uv = u;
        uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
        CHECK(G->normalize(uv) == G->mul(G->normalize(u), G->normalize(v)));
    }
}

TEST_CASE("relations hold on both sides after normalization") {
    for (const char* f : {"sl23.grp", "q8.grp", "d4.grp", "a4.grp", "c3sc4.grp", "s3.grp"}) {
        auto G = load(f);
        const auto& lp = G->presentation();
        for (std::size_t i = 0; i < lp.size(); ++i) {
            CHECK(G->power(G->generator(i), static_cast<long>(lp.generators[i].prime)) ==
                  G->normalize(lp.power_words[i]));
            for (std::size_t j = 0; j < i; ++j) {
                std::size_t lhs = G->mul(G->mul(G->inv(G->generator(i)), G->generator(j)),
                                         G->generator(i));
                CHECK(lhs == G->normalize(lp.conj_words[i][j]));
            }
        }
    }
}

TEST_CASE("conjugacy classes") {
    auto Q = load("q8.grp");
    auto classes = Q->conjugacy_classes();
    REQUIRE(classes.size() == 5);
    // {1},{x},{y,xy},{z,xz},{yz,xyz}
    auto word_class = [&](const std::vector<std::size_t>& cls) {
        std::set<std::string> s;
        for (auto e : cls) s.insert(Q->element_word(e));
        return s;
    };
    // canonical order: ascending lexicographic minimal representative
    CHECK(word_class(classes[0]) == std::set<std::string>{"1"});
    CHECK(word_class(classes[1]) == std::set<std::string>{"z", "x z"});
    CHECK(word_class(classes[2]) == std::set<std::string>{"y", "x y"});
    CHECK(word_class(classes[3]) == std::set<std::string>{"y z", "x y z"});
    CHECK(word_class(classes[4]) == std::set<std::string>{"x"});

    CHECK(load("sl23.grp")->conjugacy_classes().size() == 7);

    auto C = load("c12.grp");
    CHECK(C->conjugacy_classes().size() == C->order());

    // classes partition the group and their sizes divide the order
    for (const char* f : {"sl23.grp", "a4.grp", "d4.grp", "s3.grp"}) {
        auto G = load(f);
        auto cls = G->conjugacy_classes();
        std::size_t total = 0;
        for (const auto& c : cls) {
            total += c.size();
            CHECK(G->order() % c.size() == 0);
        }
        CHECK(total == G->order());
    }
}

TEST_CASE("derived subgroup and abelianization") {
    auto G = load("sl23.grp");
    auto derived = G->derived_subgroup();
    CHECK(derived.size() == 8);
    for (auto e : derived) CHECK(G->in_level(e, 3)); // the Q8 term of the series
    CHECK(G->abelianization().invariant_factors == std::vector<std::uint64_t>{3});

    auto C4 = load("c4.grp");
    CHECK(C4->derived_subgroup().size() == 1);
    CHECK(C4->abelianization().invariant_factors == std::vector<std::uint64_t>{4});

    auto S3 = load("s3.grp");
    CHECK(S3->derived_subgroup().size() == 3);
    CHECK(S3->abelianization().invariant_factors == std::vector<std::uint64_t>{2});

    auto Q8 = load("q8.grp");
    auto q8d = Q8->derived_subgroup();
    CHECK(q8d.size() == 2); // {1, x}
}

TEST_CASE("abelianization respects multiplication") {
    auto G = load("c12.grp");
    const auto& ab = G->abelianization();
    REQUIRE(ab.invariant_factors == std::vector<std::uint64_t>{12});
    for (std::size_t a = 0; a < G->order(); ++a)
        for (std::size_t b = 0; b < G->order(); ++b) {
            auto expect = (ab.image[a][0] + ab.image[b][0]) % 12;
            CHECK(ab.image[G->mul(a, b)][0] == expect);
        }
}

TEST_CASE("cyclic quotient kernels") {
    auto K4 = load("c2c2.grp");
    auto ks = K4->cyclic_quotient_kernels();
    REQUIRE(ks.size() == 4);
    CHECK(ks[0].d == 1);
    CHECK(ks[0].kernel.size() == 4);
    int d2 = 0;
    for (const auto& k : ks)
        if (k.d == 2) {
            ++d2;
            CHECK(k.kernel.size() == 2);
        }
    CHECK(d2 == 3);

    auto C4 = load("c4.grp");
    auto k4 = C4->cyclic_quotient_kernels();
    REQUIRE(k4.size() == 3);
    CHECK(k4[0].d == 1);
    CHECK(k4[1].d == 2);
    CHECK(k4[2].d == 4);
    CHECK(k4[2].kernel == std::vector<std::size_t>{0});

    auto C33 = load("c3c3.grp");
    auto k33 = C33->cyclic_quotient_kernels();
    CHECK(k33.size() == 5); // G itself plus four order-3 kernels
    int d3 = 0;
    for (const auto& k : k33)
        if (k.d == 3) ++d3;
    CHECK(d3 == 4);

    CHECK_THROWS_AS(load("s3.grp")->cyclic_quotient_kernels(), NotAbelian);
}

TEST_CASE("coset generator powers are consistent") {
    auto C12 = load("c12.grp");
    for (const auto& k : C12->cyclic_quotient_kernels()) {
        std::size_t x = k.coset_generator;
        for (std::size_t g = 0; g < C12->order(); ++g) {
            // g and x^power_of[g] lie in the same coset
            std::size_t shifted = C12->mul(g, C12->inv(C12->power(x, static_cast<long>(k.power_of[g]))));
            CHECK(std::binary_search(k.kernel.begin(), k.kernel.end(), shifted));
        }
    }
}

TEST_CASE("number of normal forms and Latin square are certified") {
    for (const char* f :
         {"c2.grp", "c4.grp", "c6.grp", "c8.grp", "c12.grp", "c2c2.grp", "c3c3.grp",
          "s3.grp", "d4.grp", "q8.grp", "a4.grp", "c3sc4.grp", "sl23.grp"}) {
        auto rep = load_group_file(data(f));
        std::uint64_t expected = 1;
        for (const auto& g : rep.group->presentation().generators) expected *= g.prime;
        CHECK(rep.order == expected);
        CHECK(rep.associativity_triples_checked >= expected * expected);
    }
}
