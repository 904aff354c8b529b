#include "solvrep/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace solvrep {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

Rational rational_pow(const Rational& base, long k) {
    if (k == 0) return Rational(1);
    bool neg = k < 0;
    unsigned long e = neg ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Rational acc(1), sq(base);
    while (e) {
        if (e & 1) acc *= sq;
        sq *= sq;
        e >>= 1;
    }
    if (neg) {
        if (acc == 0) throw std::invalid_argument("negative power of zero");
        acc = Rational(1) / acc;
    }
    acc.canonicalize();
    return acc;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("inverse_mod: arguments not coprime");
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<std::uint64_t>(t);
}

} // namespace solvrep
