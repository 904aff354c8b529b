#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvrep/errors.hpp"
#include "solvrep/rational.hpp"

namespace solvrep {

/// Coefficients of the m-th cyclotomic polynomial over Z, ascending degree,
/// monic.  Cached; safe for concurrent callers.
const std::vector<Integer>& cyclotomic_polynomial_z(std::uint64_t m);

/// Exact element of the cyclotomic field Q(zeta_m), stored on the power
/// basis 1, zeta, ..., zeta^(phi(m)-1) reduced modulo Phi_m.  Conductor
/// m = 1 represents plain Q.  Values are immutable; all operations return
/// fresh values and promote mixed conductors to the lcm.
class CycNumber {
public:
    CycNumber() : m_(1), c_(1, Rational(0)) {}
    /* implicit */ CycNumber(const Rational& r) : m_(1), c_(1, r) {}
    /* implicit */ CycNumber(long n) : m_(1), c_(1, Rational(n)) {}

    static CycNumber zero(std::uint64_t m);
    static CycNumber one(std::uint64_t m);
    /// zeta_m^k, represented at conductor m (k may be any integer).
    static CycNumber root_of_unity(std::uint64_t m, long k);
    /// Builds a value at conductor m from raw power-basis coefficients
    /// (size phi(m)).
    static CycNumber from_coeffs(std::uint64_t m, std::vector<Rational> coeffs);

    std::uint64_t conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    /// True when the unique power-basis representation is a plain rational.
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()

    /// Re-expresses the value at conductor M (m must divide M).
    CycNumber coerce(std::uint64_t big_m) const;
    /// Attempts to re-express the value at a smaller conductor dividing m;
    /// returns nullopt when the value does not lie in the subfield.
    std::optional<CycNumber> demote(std::uint64_t small_m) const;

    /// Galois automorphism zeta -> zeta^k, gcd(k, m) = 1.
    CycNumber galois(std::uint64_t k) const;
    /// Complex conjugation, i.e. the automorphism zeta -> zeta^(-1).
    CycNumber conj() const;

    CycNumber operator-() const;
    CycNumber inverse() const; // throws DivisionByZero on zero
    CycNumber pow(long k) const;

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator/(const CycNumber& a, const CycNumber& b);
    CycNumber& operator+=(const CycNumber& b) { return *this = *this + b; }
    CycNumber& operator-=(const CycNumber& b) { return *this = *this - b; }
    CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }
    CycNumber& operator/=(const CycNumber& b) { return *this = *this / b; }

    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    /// "(a0) + (a1)*z^1 + ..." with every power-basis coefficient listed;
    /// round-trips bit-exactly through from_string at the same conductor.
    std::string to_string() const;
    static CycNumber from_string(const std::string& s, std::uint64_t m);
    /// "field: Q" (m = 1) or "field: Q(zeta_m)".
    std::string field_header() const;

private:
    std::uint64_t m_;
    std::vector<Rational> c_;
};

/// Primitive p-th root of unity at conductor m (requires p | m).
CycNumber primitive_root_in(std::uint64_t m, std::uint64_t p);

enum class RootBranch { Forward, Reverse };

struct PthRootOptions {
    RootBranch branch = RootBranch::Forward;
    /// Rounding denominator bound for exact reconstruction; 0 selects a
    /// generous default.
    Integer denominator_bound = 0;
    unsigned start_precision = 256;
    unsigned max_precision = 4096;
};

/// Exact p-th root of lambda in its own field Q(zeta_m): returns mu with
/// mu^p = lambda, verified by exact multiplication before returning.  Any
/// of the p valid roots may be returned; the branch option selects which
/// one deterministically.  Requires p | m and lambda != 0; throws
/// NoRootFound when no p-th root exists in the field.
CycNumber pth_root(const CycNumber& lambda, std::uint64_t p,
                   const PthRootOptions& opts = {});

} // namespace solvrep
