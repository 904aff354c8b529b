#include "solvrep/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace solvrep {

namespace {
constexpr mpfr_prec_t kGuardBits = 64;
}

BigFloat BigFloat::from_rational(const Rational& r, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_q(x.v_, r.get_mpq_t(), MPFR_RNDN);
    return x;
}

BigFloat BigFloat::from_long(long n, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_si(x.v_, n, MPFR_RNDN);
    return x;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigComplex cplx_add(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
}

BigComplex cplx_sub(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
}

BigComplex cplx_mul(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigFloat cplx_abs(const BigComplex& a) {
    BigFloat r(std::max(a.re.precision(), a.im.precision()));
    mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
    return r;
}

std::vector<std::uint64_t> units_mod(std::uint64_t m) {
    if (m == 1) return {1};
    std::vector<std::uint64_t> u;
    for (std::uint64_t k = 1; k < m; ++k)
        if (gcd_u64(k, m) == 1) u.push_back(k);
    return u;
}

namespace {

// e^(2*pi*i*num/den) at the given working precision.
BigComplex unit_circle_point(long num, std::uint64_t den, mpfr_prec_t prec) {
    BigFloat angle(prec), c(prec), s(prec);
    mpfr_const_pi(angle.raw(), MPFR_RNDN);
    mpfr_mul_si(angle.raw(), angle.raw(), 2 * num, MPFR_RNDN);
    mpfr_div_ui(angle.raw(), angle.raw(), static_cast<unsigned long>(den), MPFR_RNDN);
    mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
    return {c, s};
}

BigComplex embed_under(const CycNumber& a, std::uint64_t k, mpfr_prec_t work) {
    const std::uint64_t m = a.conductor();
    BigComplex acc{BigFloat(work), BigFloat(work)};
    for (size_t j = 0; j < a.coeffs().size(); ++j) {
        const Rational& cj = a.coeffs()[j];
        if (cj == 0) continue;
        BigComplex term = unit_circle_point(static_cast<long>((j * k) % m), m, work);
        BigFloat w = BigFloat::from_rational(cj, work);
        term.re = term.re * w;
        term.im = term.im * w;
        acc = cplx_add(acc, term);
    }
    return acc;
}

BigFloat ldexp_one(long e, mpfr_prec_t prec) {
    BigFloat t(prec);
    mpfr_set_ui_2exp(t.raw(), 1, e, MPFR_RNDN);
    return t;
}

} // namespace

BigComplex embed_complex(const CycNumber& a, unsigned precision) {
    return embed_under(a, 1, static_cast<mpfr_prec_t>(precision) + kGuardBits);
}

std::complex<double> embed_complex_d(const CycNumber& a, unsigned precision) {
    return embed_complex(a, precision).to_std();
}

std::vector<BigComplex> embed_all(const CycNumber& a, unsigned precision) {
    mpfr_prec_t work = static_cast<mpfr_prec_t>(precision) + kGuardBits;
    std::vector<BigComplex> out;
    for (std::uint64_t k : units_mod(a.conductor())) out.push_back(embed_under(a, k, work));
    return out;
}

namespace {

// Solves the real least-squares system stacked from all embeddings and
// rounds to denominator-bounded rationals; nullopt when the residual gate
// fails.  `values` has one entry per unit k (ascending).  tol_exp sets the
// acceptance tolerance 2^tol_exp on the per-embedding residual.
std::optional<CycNumber> reconstruct_impl(const std::vector<BigComplex>& values,
                                          std::uint64_t m, const Integer& den_bound,
                                          mpfr_prec_t work, long tol_exp) {
    const auto units = units_mod(m);
    const size_t phi = totient(m);
    if (values.size() != phi) return std::nullopt;

    // A is 2*phi x phi: rows Re/Im of sigma_k(zeta^j); b the matching values.
    std::vector<std::vector<BigFloat>> A(2 * phi, std::vector<BigFloat>(phi, BigFloat(work)));
    std::vector<BigFloat> b(2 * phi, BigFloat(work));
    for (size_t r = 0; r < phi; ++r) {
        for (size_t j = 0; j < phi; ++j) {
            BigComplex basis =
                unit_circle_point(static_cast<long>((j * units[r]) % m), m, work);
            A[2 * r][j] = basis.re;
            A[2 * r + 1][j] = basis.im;
        }
        b[2 * r] = values[r].re;
        b[2 * r + 1] = values[r].im;
    }

    // Normal equations M x = y with Gaussian elimination (partial pivot).
    std::vector<std::vector<BigFloat>> M(phi, std::vector<BigFloat>(phi, BigFloat(work)));
    std::vector<BigFloat> y(phi, BigFloat(work));
    for (size_t i = 0; i < phi; ++i) {
        for (size_t j = 0; j < phi; ++j) {
            BigFloat s(work);
            for (size_t r = 0; r < 2 * phi; ++r) s = s + A[r][i] * A[r][j];
            M[i][j] = s;
        }
        BigFloat s(work);
        for (size_t r = 0; r < 2 * phi; ++r) s = s + A[r][i] * b[r];
        y[i] = s;
    }
    for (size_t col = 0; col < phi; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < phi; ++r)
            if (M[piv][col].abs().less_than(M[r][col].abs())) piv = r;
        std::swap(M[piv], M[col]);
        std::swap(y[piv], y[col]);
        if (mpfr_zero_p(M[col][col].raw())) return std::nullopt;
        for (size_t r = col + 1; r < phi; ++r) {
            BigFloat f = M[r][col] / M[col][col];
            for (size_t j = col; j < phi; ++j) M[r][j] = M[r][j] - f * M[col][j];
            y[r] = y[r] - f * y[col];
        }
    }
    std::vector<BigFloat> x(phi, BigFloat(work));
    for (size_t i = phi; i-- > 0;) {
        BigFloat s = y[i];
        for (size_t j = i + 1; j < phi; ++j) s = s - M[i][j] * x[j];
        x[i] = s / M[i][i];
    }

    // Round to nearest rational with denominator dividing den_bound.
    std::vector<Rational> coeffs(phi);
    BigFloat bound = BigFloat(work);
    mpfr_set_z(bound.raw(), den_bound.get_mpz_t(), MPFR_RNDN);
    for (size_t j = 0; j < phi; ++j) {
        BigFloat scaled = x[j] * bound;
        Integer n;
        mpfr_get_z(n.get_mpz_t(), scaled.raw(), MPFR_RNDN);
        Rational q(n, den_bound);
        q.canonicalize();
        coeffs[j] = q;
    }

    // Residual gate: embeddings of the rounded candidate must reproduce
    // the inputs to within the tolerance.
    CycNumber cand = CycNumber::from_coeffs(m, coeffs);
    BigFloat tol = ldexp_one(tol_exp, work);
    for (size_t r = 0; r < phi; ++r) {
        BigComplex ev = embed_under(cand, units[r], work);
        BigFloat err = cplx_abs(cplx_sub(ev, values[r]));
        if (tol.less_than(err)) return std::nullopt;
    }
    return cand;
}

} // namespace

namespace {

CycNumber reconstruct_single(const BigComplex& z, std::uint64_t m,
                             const Integer& denominator_bound, mpfr_prec_t work,
                             long tol_exp) {
    const size_t phi = totient(m);

    // Rational hypothesis first: every embedding of a rational equals z.
    {
        std::vector<BigComplex> vals(phi, z);
        auto r = reconstruct_impl(vals, m, denominator_bound, work, tol_exp);
        if (r && r->is_rational()) return *r;
    }
    if (phi <= 2) {
        // The only other embedding is complex conjugation.
        std::vector<BigComplex> vals;
        vals.push_back(z);
        if (phi == 2) vals.push_back(BigComplex{z.re, -z.im});
        auto r = reconstruct_impl(vals, m, denominator_bound, work, tol_exp);
        if (r) return *r;
        throw ReconstructionFailed("residual too large at conductor " + std::to_string(m));
    }
    throw ReconstructionFailed(
        "single embedding value underdetermines phi(m) > 2 coefficients; "
        "supply all embeddings");
}

} // namespace

CycNumber reconstruct_exact(const std::vector<BigComplex>& values, std::uint64_t m,
                            const Integer& denominator_bound, unsigned precision) {
    mpfr_prec_t work = static_cast<mpfr_prec_t>(precision) + kGuardBits;
    auto r = reconstruct_impl(values, m, denominator_bound, work,
                              -static_cast<long>(precision / 3));
    if (!r) throw ReconstructionFailed("residual too large at conductor " + std::to_string(m));
    return *r;
}

CycNumber reconstruct_exact(const BigComplex& z, std::uint64_t m,
                            const Integer& denominator_bound, unsigned precision) {
    mpfr_prec_t work = static_cast<mpfr_prec_t>(precision) + kGuardBits;
    return reconstruct_single(z, m, denominator_bound, work,
                              -static_cast<long>(precision / 3));
}

CycNumber reconstruct_exact(std::complex<double> z, std::uint64_t m,
                            const Integer& denominator_bound) {
    // Inputs given as doubles may themselves be coarse approximations, so
    // the acceptance tolerance is a fixed 2^-20.
    mpfr_prec_t work = 128;
    BigFloat re(work), im(work);
    mpfr_set_d(re.raw(), z.real(), MPFR_RNDN);
    mpfr_set_d(im.raw(), z.imag(), MPFR_RNDN);
    return reconstruct_single(BigComplex{re, im}, m, denominator_bound, work, -20);
}

// --- p-th root via numeric roots + exact reconstruction ------------------

namespace {

BigComplex principal_root(const BigComplex& w, std::uint64_t p, mpfr_prec_t work) {
    BigFloat r = cplx_abs(w);
    BigFloat arg(work);
    mpfr_atan2(arg.raw(), w.im.raw(), w.re.raw(), MPFR_RNDN);
    BigFloat radius(work);
    mpfr_rootn_ui(radius.raw(), r.raw(), static_cast<unsigned long>(p), MPFR_RNDN);
    BigFloat theta(work), c(work), s(work);
    mpfr_div_ui(theta.raw(), arg.raw(), static_cast<unsigned long>(p), MPFR_RNDN);
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return {radius * c, radius * s};
}

} // namespace

CycNumber pth_root(const CycNumber& lambda, std::uint64_t p, const PthRootOptions& opts) {
    if (lambda.is_zero()) throw std::invalid_argument("pth_root: lambda must be nonzero");
    const std::uint64_t m = lambda.conductor();
    if (m % p != 0)
        throw std::invalid_argument("pth_root: p must divide the conductor");

    const size_t phi = totient(m);
    double combos = 1;
    for (size_t i = 0; i < phi; ++i) combos *= static_cast<double>(p);
    if (combos > (1 << 16))
        throw NoRootFound("branch search space too large at conductor " + std::to_string(m));

    Integer den_bound = opts.denominator_bound;
    if (den_bound == 0) den_bound = Integer(1) << 40;

    for (unsigned bits = opts.start_precision; bits <= opts.max_precision; bits *= 2) {
        mpfr_prec_t work = static_cast<mpfr_prec_t>(bits) + kGuardBits;
        auto vals = embed_all(lambda, bits);
        std::vector<BigComplex> roots;
        roots.reserve(vals.size());
        for (const auto& v : vals) roots.push_back(principal_root(v, p, work));

        // Rotations e^(2*pi*i*c/p), c = 0..p-1.
        std::vector<BigComplex> rot;
        for (std::uint64_t c = 0; c < p; ++c)
            rot.push_back(unit_circle_point(static_cast<long>(c), p, work));

        auto try_tuple = [&](const std::vector<std::uint64_t>& t) -> std::optional<CycNumber> {
            std::vector<BigComplex> v(phi, BigComplex{BigFloat(work), BigFloat(work)});
            for (size_t i = 0; i < phi; ++i) v[i] = cplx_mul(roots[i], rot[t[i]]);
            auto cand = reconstruct_impl(v, m, den_bound, work,
                                         -static_cast<long>(bits / 3));
            if (!cand) return std::nullopt;
            if (cand->pow(static_cast<long>(p)) == lambda) return cand;
            return std::nullopt;
        };

        // Uniform rotations of the principal roots first, then the remaining
        // per-embedding branch combinations in lex order.
        std::vector<std::vector<std::uint64_t>> constants, mixed;
        for (std::uint64_t c = 0; c < p; ++c) constants.emplace_back(phi, c);
        {
            std::vector<std::uint64_t> t(phi, 0);
            bool more = true;
            while (more) {
                bool is_const = std::all_of(t.begin(), t.end(),
                                            [&](std::uint64_t c) { return c == t[0]; });
                if (!is_const) mixed.push_back(t);
                more = false;
                for (size_t i = phi; i-- > 0;) {
                    if (++t[i] < p) {
                        more = true;
                        break;
                    }
                    t[i] = 0;
                }
            }
        }
        std::vector<std::vector<std::uint64_t>> tuples;
        if (opts.branch == RootBranch::Forward) {
            tuples = constants;
            tuples.insert(tuples.end(), mixed.begin(), mixed.end());
        } else {
            tuples.assign(mixed.rbegin(), mixed.rend());
            tuples.insert(tuples.end(), constants.rbegin(), constants.rend());
        }

        for (const auto& t : tuples)
            if (auto mu = try_tuple(t)) return *mu;
    }
    throw NoRootFound("no exact p-th root of the given value in Q(zeta_" +
                      std::to_string(m) + ")");
}

} // namespace solvrep
