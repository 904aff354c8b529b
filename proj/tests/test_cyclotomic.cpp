#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "solvrep/cyclotomic.hpp"
#include "solvrep/numeric.hpp"

using namespace solvrep;

namespace {

CycNumber zeta(std::uint64_t m, long k = 1) { return CycNumber::root_of_unity(m, k); }

// Deterministic random elements with small coefficients.
CycNumber random_cyc(std::mt19937& rng, std::uint64_t m) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c(totient(m));
    for (auto& x : c) x = rat(num(rng), den(rng));
    return CycNumber::from_coeffs(m, c);
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    auto coeffs = [](std::uint64_t m) {
        std::vector<long> v;
        for (const auto& c : cyclotomic_polynomial_z(m)) v.push_back(c.get_si());
        return v;
    };
    CHECK(coeffs(1) == std::vector<long>{-1, 1});
    CHECK(coeffs(2) == std::vector<long>{1, 1});
    CHECK(coeffs(3) == std::vector<long>{1, 1, 1});
    CHECK(coeffs(4) == std::vector<long>{1, 0, 1});
    CHECK(coeffs(6) == std::vector<long>{1, -1, 1});
    CHECK(coeffs(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("Phi_m(zeta_m) = 0 for all m <= 60") {
    for (std::uint64_t m = 1; m <= 60; ++m) {
        const auto& phi = cyclotomic_polynomial_z(m);
        CycNumber z = zeta(m), acc = CycNumber::zero(m);
        for (size_t i = 0; i < phi.size(); ++i)
            acc += CycNumber(Rational(phi[i])) * z.pow(static_cast<long>(i));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("basic field op examples") {
    CHECK(zeta(4) * zeta(4) == CycNumber(-1));
    CHECK((CycNumber(1) + zeta(3) + zeta(3, 2)).is_zero());

    // 1/(1+zeta_3) = 1 + zeta_3^2 = -zeta_3 by the vanishing sum of cube roots.
    CycNumber inv = CycNumber(1) / (CycNumber(1) + zeta(3));
    CHECK(inv == CycNumber(1) + zeta(3, 2));
    CHECK(inv == -zeta(3));
    CHECK((CycNumber(1) + zeta(3)) * inv == CycNumber(1));
}

TEST_CASE("root_of_unity and coercion identities") {
    CHECK(zeta(3, 3) == CycNumber(1));
    CHECK(zeta(6, 2) == zeta(3).coerce(6));
    CHECK(zeta(6, 3) == CycNumber(-1));
    CHECK(zeta(12, 12) == CycNumber(1));
    CHECK(primitive_root_in(12, 3) == zeta(3).coerce(12));
}

TEST_CASE("demote recognizes subfield membership") {
    CycNumber a = zeta(3).coerce(12);
    auto down = a.demote(3);
    REQUIRE(down.has_value());
    CHECK(*down == zeta(3));
    CHECK(!zeta(12).demote(3).has_value());
    CHECK(zeta(12, 0).demote(1).has_value());
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(12345);
    for (std::uint64_t m : {1ull, 3ull, 4ull, 8ull, 12ull}) {
        for (int trial = 0; trial < 250; ++trial) {
            CycNumber a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            if (!a.is_zero()) CHECK(a * a.inverse() == CycNumber(1));
        }
    }
}

TEST_CASE("coerce is a ring embedding") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        CycNumber a = random_cyc(rng, 6), b = random_cyc(rng, 6);
        CHECK((a * b).coerce(24) == a.coerce(24) * b.coerce(24));
        CHECK((a + b).coerce(24) == a.coerce(24) + b.coerce(24));
    }
}

TEST_CASE("galois automorphisms and conjugation") {
    CycNumber a = zeta(12, 5);
    CHECK(a.galois(5) == zeta(12, 25));
    CHECK(a.conj() == zeta(12, -5));
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        CycNumber x = random_cyc(rng, 12), y = random_cyc(rng, 12);
        CHECK((x * y).galois(7) == x.galois(7) * y.galois(7));
        CHECK((x * x.conj()).conj() == x * x.conj()); // norms are conjugation-fixed
    }
}

TEST_CASE("division by zero is reported") {
    CHECK_THROWS_AS(CycNumber(1) / CycNumber(0), DivisionByZero);
    CHECK_THROWS_AS(CycNumber::zero(6).inverse(), DivisionByZero);
}

TEST_CASE("embed_complex") {
    auto z8 = embed_complex_d(zeta(8));
    CHECK(std::abs(z8.real() - 0.7071067811865476) < 1e-12);
    CHECK(std::abs(z8.imag() - 0.7071067811865476) < 1e-12);

    auto m8 = embed_complex_d(CycNumber(-8));
    CHECK(std::abs(m8.real() + 8.0) < 1e-12);
    CHECK(std::abs(m8.imag()) < 1e-12);

    auto v = embed_complex_d(CycNumber(1) + zeta(3));
    CHECK(std::abs(v.real() - 0.5) < 1e-12);
    CHECK(std::abs(v.imag() - 0.8660254037844386) < 1e-12);
}

TEST_CASE("embedding respects products") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        CycNumber a = random_cyc(rng, 12), b = random_cyc(rng, 12);
        auto pa = embed_complex_d(a), pb = embed_complex_d(b), pab = embed_complex_d(a * b);
        CHECK(std::abs(pa * pb - pab) < 1e-9);
    }
}

TEST_CASE("reconstruct_exact") {
    CHECK(reconstruct_exact(std::complex<double>(-2.0, 0.0), 12, 24) == CycNumber(-2));
    CHECK(reconstruct_exact(std::complex<double>(0.5, 0.8660254), 3, 24) ==
          CycNumber(1) + zeta(3));
    CHECK_THROWS_AS(reconstruct_exact(std::complex<double>(0.371, 0.118), 3, 24),
                    ReconstructionFailed);

    // Full-vector reconstruction at a larger conductor.
    CycNumber target = zeta(12, 5) + CycNumber(rat(3, 2));
    auto vals = embed_all(target, 256);
    CHECK(reconstruct_exact(vals, 12, 24, 256) == target);
}

TEST_CASE("pth_root examples") {
    // lambda = -8 at conductor 12, as in the order-24 pipeline.
    CycNumber lam = CycNumber(-8).coerce(12);
    CycNumber mu = pth_root(lam, 3);
    CHECK(mu == CycNumber(-2).coerce(12));
    CHECK(mu.pow(3) == lam);

    // Any branch of a root of unity.
    CycNumber one_root = pth_root(CycNumber(1).coerce(6), 3);
    CHECK(one_root.pow(3) == CycNumber(1));

    // zeta_3 has cube roots in Q(zeta_9).
    CycNumber z3 = zeta(3).coerce(9);
    CycNumber r = pth_root(z3, 3);
    CHECK(r.pow(3) == z3);

    // The reverse branch returns a different (still exact) root.
    CycNumber mu2 = pth_root(lam, 3, {.branch = RootBranch::Reverse});
    CHECK(mu2.pow(3) == lam);
    CHECK(mu2 != mu);
}

TEST_CASE("pth_root failure on a non-residue") {
    // 2 is not a square in Q(zeta_4).
    CHECK_THROWS_AS(pth_root(CycNumber(2).coerce(4), 2,
                             {.start_precision = 128, .max_precision = 256}),
                    NoRootFound);
}

TEST_CASE("serialization round-trip") {
    std::mt19937 rng(31337);
    for (std::uint64_t m : {1ull, 2ull, 3ull, 12ull}) {
        for (int trial = 0; trial < 50; ++trial) {
            CycNumber a = random_cyc(rng, m);
            CHECK(CycNumber::from_string(a.to_string(), m) == a);
        }
    }
    CHECK(CycNumber(rat(1, 2)).to_string() == "(1/2)");
    CHECK(zeta(4).to_string() == "(0) + (1)*z^1");
    CHECK(CycNumber(rat(1, 2)).field_header() == "field: Q");
    CHECK(zeta(4).field_header() == "field: Q(zeta_4)");
}
