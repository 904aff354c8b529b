#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace solvrep {

/// Exact rational scalar.  Backed by GMP; mpq_class keeps the canonical
/// form we require (gcd(num, den) = 1, den > 0) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

/// k-th power with integer exponent (k may be negative for nonzero base).
Rational rational_pow(const Rational& base, long k);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

bool is_prime_u64(std::uint64_t n);

/// Euler totient of n >= 1.
std::uint64_t totient(std::uint64_t n);

/// mod inverse of a modulo m (gcd(a,m) = 1 required).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

} // namespace solvrep
