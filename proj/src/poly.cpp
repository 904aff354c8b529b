#include "solvrep/poly.hpp"

#include <sstream>

namespace solvrep {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::xn_minus_1(std::uint64_t n) {
    std::vector<CycNumber> c(n + 1, CycNumber(0));
    c[0] = CycNumber(-1);
    c[n] = CycNumber(1);
    return Poly(std::move(c));
}

Poly Poly::x_minus(const CycNumber& r) { return Poly({-r, CycNumber(1)}); }

bool Poly::is_monic() const { return !c_.empty() && c_.back() == CycNumber(1); }

CycNumber Poly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : CycNumber(0);
}

CycNumber Poly::leading() const {
    if (c_.empty()) return CycNumber(0);
    return c_.back();
}

std::uint64_t Poly::conductor() const {
    std::uint64_t m = 1;
    for (const auto& c : c_) m = lcm_u64(m, c.conductor());
    return m;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<CycNumber> c(std::max(a.c_.size(), b.c_.size()), CycNumber(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<CycNumber> c(a.c_.size() + b.c_.size() - 1, CycNumber(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly(), rem};
    std::vector<CycNumber> quot(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1,
                                CycNumber(0));
    CycNumber lead_inv = divisor.leading().inverse();
    for (long i = rem.degree(); i >= divisor.degree(); --i) {
        CycNumber c = rem.coeff(static_cast<std::size_t>(i)) * lead_inv;
        if (c.is_zero()) continue;
        quot[static_cast<std::size_t>(i - divisor.degree())] = c;
        for (long j = 0; j <= divisor.degree(); ++j) {
            std::size_t pos = static_cast<std::size_t>(i - divisor.degree() + j);
            rem.c_[pos] -= c * divisor.coeff(static_cast<std::size_t>(j));
        }
    }
    rem.trim();
    return {Poly(std::move(quot)), rem};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw FactorMismatch("polynomial division leaves a remainder");
    return q;
}

CycNumber Poly::eval(const CycNumber& x) const {
    CycNumber acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::reciprocal_monic() const {
    if (is_zero() || c_[0].is_zero())
        throw std::invalid_argument("reciprocal requires a nonzero constant term");
    std::vector<CycNumber> rev(c_.rbegin(), c_.rend());
    CycNumber lead_inv = rev.back().inverse();
    for (auto& c : rev) c *= lead_inv;
    return Poly(std::move(rev));
}

std::string Poly::to_string() const {
    std::ostringstream os;
    os << "poly conductor=" << conductor() << " coeffs:";
    for (const auto& c : c_) os << " (" << c.to_string() << ");";
    return os.str();
}

Poly cyclotomic_poly(std::uint64_t d) {
    const auto& z = cyclotomic_polynomial_z(d);
    std::vector<CycNumber> c;
    c.reserve(z.size());
    for (const auto& x : z) c.emplace_back(Rational(x));
    return Poly(std::move(c));
}

} // namespace solvrep
