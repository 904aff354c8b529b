#include "solvrep/cyclic_abelian.hpp"

#include "solvrep/numeric.hpp"

#include <algorithm>
#include <map>

namespace solvrep {

std::vector<Poly> factor_cyclotomic(std::uint64_t d, std::uint64_t m) {
    if (m == 1 || d <= 2) {
        // Phi_d is irreducible over Q; for d <= 2 it is linear and stays
        // irreducible over every field.
        return {cyclotomic_poly(d)};
    }
    const std::uint64_t L = lcm_u64(d, m);

    // Subgroup of (Z/d)* fixing Q(zeta_m): residues of units of L that are
    // congruent to 1 modulo m.
    std::vector<std::uint64_t> H;
    for (std::uint64_t K = 1; K < L; ++K)
        if (gcd_u64(K, L) == 1 && K % m == 1) H.push_back(K % d);

    std::vector<std::uint64_t> units;
    for (std::uint64_t j = 1; j < d; ++j)
        if (gcd_u64(j, d) == 1) units.push_back(j);

    std::vector<Poly> factors;
    std::vector<bool> used(d, false);
    for (std::uint64_t j : units) {
        if (used[j]) continue;
        std::vector<std::uint64_t> orbit;
        for (std::uint64_t h : H) {
            std::uint64_t e = (j * h) % d;
            if (!used[e]) {
                used[e] = true;
                orbit.push_back(e);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        Poly f = Poly::constant(CycNumber(1));
        for (std::uint64_t e : orbit)
            f = f * Poly::x_minus(CycNumber::root_of_unity(L, static_cast<long>(e * (L / d))));
        // Coefficients lie in Q(zeta_m) by Galois theory; re-express them.
        std::vector<CycNumber> demoted;
        for (const auto& c : f.coeffs()) {
            auto down = c.coerce(L).demote(m);
            if (!down)
                throw std::logic_error("orbit product coefficient escaped the base field");
            demoted.push_back(*down);
        }
        factors.emplace_back(std::move(demoted));
    }
    return factors;
}

std::vector<Poly> factor_xn_minus_1(std::uint64_t n, std::uint64_t m) {
    std::vector<Poly> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        auto fs = factor_cyclotomic(d, m);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

std::size_t cyclic_generator(const Group& g) {
    if (g.exponent() != g.order()) throw NotCyclic("group exponent differs from its order");
    for (std::size_t e = 0; e < g.order(); ++e)
        if (g.element_order(e) == g.order()) return e;
    throw NotCyclic("no generator found");
}

Representation companion_rep(const Poly& f, std::shared_ptr<const Group> group) {
    const std::uint64_t n = group->order();
    if (!f.is_monic() || f.degree() < 1)
        throw FactorMismatch("factor must be monic of positive degree");
    if (!Poly::xn_minus_1(n).divmod(f).second.is_zero())
        throw FactorMismatch("polynomial does not divide X^n - 1");

    const std::size_t d = static_cast<std::size_t>(f.degree());
    Mat C(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) C.at(i + 1, i) = CycNumber(1);
    for (std::size_t i = 0; i < d; ++i) C.at(i, d - 1) = -f.coeff(i);

    std::size_t y = cyclic_generator(*group);
    std::vector<Mat> images;
    for (std::size_t i = 0; i < group->num_generators(); ++i) {
        std::size_t target = group->generator(i);
        long k = 0;
        while (group->power(y, k) != target) {
            ++k;
            if (static_cast<std::uint64_t>(k) > n)
                throw NotCyclic("generator not a power of the canonical generator");
        }
        images.push_back(C.pow(k));
    }
    return Representation(group, group->num_generators(), std::move(images),
                          lcm_u64(f.conductor(), 1));
}

std::vector<CycNumber> newton_pci_coefficients(const Poly& f, std::uint64_t n) {
    if (!Poly::xn_minus_1(n).divmod(f).second.is_zero())
        throw FactorMismatch("polynomial does not divide X^n - 1");
    const Poly g = f.reciprocal_monic(); // roots are the inverse roots of f
    const long d = g.degree();

    // Newton's identities for the power sums of g's roots: for k <= d,
    // p_k + sum_{i<k} c_(d-i) p_(k-i) + k c_(d-k) = 0; beyond the degree
    // the plain linear recurrence applies.
    std::vector<CycNumber> p(n, CycNumber(0));
    p[0] = CycNumber(static_cast<long>(d));
    for (std::uint64_t k = 1; k < n; ++k) {
        const long kk = static_cast<long>(k);
        CycNumber s(0);
        for (long i = 1; i <= std::min(kk - 1, d); ++i)
            s += g.coeff(static_cast<std::size_t>(d - i)) * p[k - static_cast<std::uint64_t>(i)];
        if (kk <= d) s += CycNumber(kk) * g.coeff(static_cast<std::size_t>(d - kk));
        p[k] = -s;
    }

    const CycNumber inv_n{Rational(1, static_cast<unsigned long>(n))};
    for (auto& c : p) c *= inv_n;
    return p;
}

AlgebraElement cyclic_pci_from_factor(const Poly& f, std::shared_ptr<const Group> group) {
    const std::uint64_t n = group->order();
    auto coeffs = newton_pci_coefficients(f, n);
    std::size_t y = cyclic_generator(*group);
    AlgebraElement e(group, f.conductor());
    for (std::uint64_t i = 0; i < n; ++i)
        e.set_coeff(group->power(y, static_cast<long>(i)), coeffs[i]);
    return e;
}

namespace {

// e_X = (1 + X + ... + X^(p-1))/p with X = zeta^-1 * (group element g).
AlgebraElement geometric_idempotent(std::shared_ptr<const Group> group, std::size_t g,
                                    const CycNumber& zeta, std::uint64_t p) {
    AlgebraElement e(group, zeta.conductor());
    CycNumber inv_p{Rational(1, static_cast<unsigned long>(p))};
    CycNumber zinv = zeta.inverse();
    for (std::uint64_t k = 0; k < p; ++k)
        e.set_coeff(group->power(g, static_cast<long>(k)), zinv.pow(static_cast<long>(k)) * inv_p);
    return e;
}

} // namespace

std::vector<AlgebraElement> ppower_pci_factorization(std::shared_ptr<const Group> group,
                                                     const CycNumber& zeta) {
    const auto& lp = group->presentation();
    const std::size_t n = lp.size();
    const std::uint64_t p = lp.generators[0].prime;
    for (const auto& g : lp.generators)
        if (g.prime != p) throw NotPPowerCyclic("mixed primes in the tower");
    if (!lp.power_words[0].letters.empty())
        throw NotPPowerCyclic("expected x_1^p = 1");
    for (std::size_t i = 1; i < n; ++i) {
        const auto& w = lp.power_words[i].letters;
        if (w.size() != 1 || w[0].first != i - 1 || w[0].second != 1)
            throw NotPPowerCyclic("expected x_i^p = x_(i-1)");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const auto& w = lp.conj_words[i][j].letters;
            if (w.size() != 1 || w[0].first != j || w[0].second != 1)
                throw NotPPowerCyclic("tower must be abelian");
        }

    std::uint64_t pn = group->order();
    if (zeta.pow(static_cast<long>(pn)) != CycNumber(1))
        throw std::invalid_argument("zeta^(p^n) must equal 1");

    // zeta_n = zeta, zeta_(i-1) = zeta_i^p.
    std::vector<CycNumber> chain(n, zeta);
    for (std::size_t i = n; i-- > 1;) chain[i - 1] = chain[i].pow(static_cast<long>(p));

    std::vector<AlgebraElement> factors;
    for (std::size_t i = 0; i < n; ++i)
        factors.push_back(geometric_idempotent(group, group->generator(i), chain[i], p));
    return factors;
}

std::vector<CrtFactor> crt_pci_factorization(std::shared_ptr<const Group> group,
                                             const CycNumber& zeta) {
    const std::uint64_t N = group->order();
    std::size_t y = cyclic_generator(*group); // throws NotCyclic
    if (zeta.pow(static_cast<long>(N)) != CycNumber(1))
        throw std::invalid_argument("zeta^N must equal 1");

    // primary decomposition N = prod q_p
    std::map<std::uint64_t, std::uint64_t> q; // prime -> p^a
    {
        std::uint64_t rest = N;
        for (std::uint64_t p = 2; p * p <= rest; ++p)
            while (rest % p == 0) {
                q[p] = (q.count(p) ? q[p] : 1) * p;
                rest /= p;
            }
        if (rest > 1) q[rest] = (q.count(rest) ? q[rest] : 1) * rest;
    }

    std::vector<CrtFactor> out;
    for (auto [p, qp] : q) {
        // y_p = y^(c_p) with c_p = (N/q_p) * ((N/q_p)^-1 mod q_p); the same
        // exponent splits zeta so that prod y_p = y and prod zeta_p = zeta.
        std::uint64_t cof = N / qp;
        std::uint64_t cp = cof * inverse_mod(cof % qp, qp);
        std::size_t yp = group->power(y, static_cast<long>(cp));
        CycNumber zp = zeta.pow(static_cast<long>(cp));
        AlgebraElement f(group, zeta.conductor());
        CycNumber inv_q{Rational(1, static_cast<unsigned long>(qp))};
        CycNumber zinv = zp.inverse();
        for (std::uint64_t k = 0; k < qp; ++k)
            f.set_coeff(group->power(yp, static_cast<long>(k)),
                        zinv.pow(static_cast<long>(k)) * inv_q);
        out.push_back({p, std::move(f)});
    }
    return out;
}

std::vector<AbelianComponent> abelian_decomposition(std::shared_ptr<const Group> group,
                                                    std::uint64_t m) {
    if (!group->is_abelian()) throw NotAbelian("abelian decomposition requires an abelian group");

    std::vector<AbelianComponent> out;
    for (const auto& kernel : group->cyclic_quotient_kernels()) {
        AlgebraElement eK = avg_idempotent(group, kernel.kernel, m);
        for (Poly& f : factor_cyclotomic(kernel.d, m)) {
            auto coeffs = newton_pci_coefficients(f, kernel.d);
            // lift: substitute the chosen coset representative for the
            // quotient generator, then pull back through e_K.
            AlgebraElement lift(group, m);
            for (std::uint64_t i = 0; i < kernel.d; ++i)
                lift.set_coeff(group->power(kernel.coset_generator, static_cast<long>(i)),
                               coeffs[i]);
            AbelianComponent comp;
            comp.kernel = kernel;
            comp.factor = f;
            comp.pci = eK * lift;

            const std::size_t deg = static_cast<std::size_t>(f.degree());
            Mat C(deg, deg);
            for (std::size_t r = 0; r + 1 < deg; ++r) C.at(r + 1, r) = CycNumber(1);
            for (std::size_t r = 0; r < deg; ++r) C.at(r, deg - 1) = -f.coeff(r);
            std::vector<Mat> images;
            for (std::size_t i = 0; i < group->num_generators(); ++i)
                images.push_back(
                    C.pow(static_cast<long>(kernel.power_of[group->generator(i)])));
            comp.rep = Representation(group, group->num_generators(), std::move(images),
                                      lcm_u64(m, f.conductor()));
            out.push_back(std::move(comp));
        }
    }
    return out;
}

std::vector<AlgebraElement> abelian_pcis(std::shared_ptr<const Group> group, std::uint64_t m) {
    std::vector<AlgebraElement> out;
    for (auto& c : abelian_decomposition(group, m)) out.push_back(std::move(c.pci));
    return out;
}

std::vector<Representation> abelian_irreps(std::shared_ptr<const Group> group, std::uint64_t m) {
    std::vector<Representation> out;
    for (auto& c : abelian_decomposition(group, m)) out.push_back(std::move(c.rep));
    return out;
}

} // namespace solvrep
