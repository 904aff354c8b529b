#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "solvrep/cyclotomic.hpp"
#include "solvrep/rational.hpp"

#include <mpfr.h>

namespace solvrep {

/// Thin RAII value wrapper around mpfr_t at a fixed precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rational(const Rational& r, mpfr_prec_t prec);
    static BigFloat from_long(long n, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    bool less_than(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    BigFloat abs() const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;

    std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }
};

BigComplex cplx_add(const BigComplex& a, const BigComplex& b);
BigComplex cplx_sub(const BigComplex& a, const BigComplex& b);
BigComplex cplx_mul(const BigComplex& a, const BigComplex& b);
BigFloat cplx_abs(const BigComplex& a);

/// Numeric value of the principal embedding sigma_1 (zeta_m -> e^(2*pi*i/m)).
/// The result satisfies |error| < 2^(-precision+2); internally a guard of
/// 64 extra bits is carried.
BigComplex embed_complex(const CycNumber& a, unsigned precision);
std::complex<double> embed_complex_d(const CycNumber& a, unsigned precision = 128);

/// Values of a under every complex embedding sigma_k, k running over the
/// units modulo m in ascending order.
std::vector<BigComplex> embed_all(const CycNumber& a, unsigned precision);

/// Units modulo m, ascending (k = 1 first).  totient(m) entries.
std::vector<std::uint64_t> units_mod(std::uint64_t m);

/// Recovers the exact element of Q(zeta_m) whose embedding values are
/// given (one per unit k, ascending), assuming every power-basis
/// coefficient denominator divides denominator_bound.  The candidate is
/// obtained by a least-squares solve against the embedded basis vectors
/// followed by bounded-denominator rounding, and is only returned when its
/// embeddings reproduce the input within the working tolerance; callers
/// must still verify the defining identity exactly.  Throws
/// ReconstructionFailed when the residual is too large.
CycNumber reconstruct_exact(const std::vector<BigComplex>& values, std::uint64_t m,
                            const Integer& denominator_bound, unsigned precision);

/// Single-value convenience: z is the principal-embedding value.  Fully
/// determined only when the element is rational or phi(m) <= 2 (where the
/// only other embedding is the complex conjugate); otherwise throws
/// ReconstructionFailed.
CycNumber reconstruct_exact(const BigComplex& z, std::uint64_t m,
                            const Integer& denominator_bound, unsigned precision);
CycNumber reconstruct_exact(std::complex<double> z, std::uint64_t m,
                            const Integer& denominator_bound);

} // namespace solvrep
