#pragma once

#include <string>
#include <vector>

#include "solvrep/cyclotomic.hpp"

namespace solvrep {

/// Dense polynomial over Q or Q(zeta_m), coefficients ascending.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<CycNumber> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const CycNumber& c) { return Poly({c}); }
    /// X^n - 1.
    static Poly xn_minus_1(std::uint64_t n);
    /// Monic linear factor X - r.
    static Poly x_minus(const CycNumber& r);

    const std::vector<CycNumber>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    CycNumber coeff(std::size_t i) const;
    CycNumber leading() const;
    std::uint64_t conductor() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Exact division; throws FactorMismatch when the remainder is nonzero.
    Poly exact_div(const Poly& divisor) const;

    CycNumber eval(const CycNumber& x) const;
    /// Coefficients of the reciprocal polynomial X^deg * f(1/X), made monic;
    /// requires a nonzero constant term.
    Poly reciprocal_monic() const;

    /// Dense serialization, degree ascending: "poly conductor=m coeffs: (c0); ...".
    std::string to_string() const;

private:
    void trim();
    std::vector<CycNumber> c_;
};

/// The d-th cyclotomic polynomial as a Poly over Q.
Poly cyclotomic_poly(std::uint64_t d);

} // namespace solvrep
