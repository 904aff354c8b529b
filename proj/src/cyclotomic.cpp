#include "solvrep/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace solvrep {

namespace {

// Exact division of integer polynomials, divisor monic.
std::vector<Integer> exact_div_z(const std::vector<Integer>& num,
                                 const std::vector<Integer>& den) {
    std::vector<Integer> rem = num;
    const size_t dd = den.size() - 1;
    std::vector<Integer> quot(rem.size() - dd, Integer(0));
    for (size_t i = rem.size(); i-- > dd;) {
        Integer c = rem[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (size_t t = 0; t <= dd; ++t) rem[i - dd + t] -= c * den[t];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("exact_div_z: division not exact");
    return quot;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial_z(std::uint64_t m) {
    static std::map<std::uint64_t, std::vector<Integer>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (X^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up.
    std::function<const std::vector<Integer>&(std::uint64_t)> get =
        [&](std::uint64_t n) -> const std::vector<Integer>& {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        std::vector<Integer> num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;
        for (std::uint64_t d = 1; d < n; ++d)
            if (n % d == 0) num = exact_div_z(num, get(d));
        return cache.emplace(n, std::move(num)).first->second;
    };
    return get(m);
}

namespace {

// In-place reduction of a rational polynomial modulo Phi_m; result is
// truncated/padded to exactly phi(m) coefficients.
void reduce_mod_phi(std::vector<Rational>& v, std::uint64_t m) {
    const auto& phi = cyclotomic_polynomial_z(m);
    const size_t d = phi.size() - 1;
    for (size_t i = v.size(); i-- > d;) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        v[i] = 0;
        for (size_t t = 0; t < d; ++t) v[i - d + t] -= c * Rational(phi[t]);
    }
    v.resize(d, Rational(0));
}

// Extended gcd over Q[X] against Phi_m; returns u with u*a = 1 (mod Phi_m).
std::vector<Rational> invert_mod_phi(const std::vector<Rational>& a, std::uint64_t m) {
    auto deg = [](const std::vector<Rational>& p) -> long {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1;
    };
    std::vector<Rational> r0, r1 = a;
    {
        const auto& phi = cyclotomic_polynomial_z(m);
        r0.assign(phi.begin(), phi.end());
    }
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)}; // coeffs of `a`
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rational> rem = r0, q(std::max<size_t>(rem.size(), 1), Rational(0));
        long d1 = deg(r1);
        Rational lead = r1[static_cast<size_t>(d1)];
        for (long i = deg(rem); i >= d1; --i) {
            Rational c = rem[static_cast<size_t>(i)] / lead;
            if (c == 0) continue;
            q[static_cast<size_t>(i - d1)] = c;
            for (long t = 0; t <= d1; ++t)
                rem[static_cast<size_t>(i - d1 + t)] -= c * r1[static_cast<size_t>(t)];
        }
        // (s0, s1) <- (s1, s0 - q*s1)
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    long d = deg(r1);
    if (d < 0) throw std::logic_error("invert_mod_phi: zero gcd (element not invertible)");
    // r1 is a nonzero constant: scale s1 by its inverse.
    Rational g = r1[0];
    for (auto& c : s1) c /= g;
    reduce_mod_phi(s1, m);
    return s1;
}

} // namespace

CycNumber CycNumber::zero(std::uint64_t m) {
    CycNumber z;
    z.m_ = m;
    z.c_.assign(totient(m), Rational(0));
    return z;
}

CycNumber CycNumber::one(std::uint64_t m) {
    CycNumber z = zero(m);
    z.c_[0] = 1;
    return z;
}

CycNumber CycNumber::root_of_unity(std::uint64_t m, long k) {
    long r = k % static_cast<long>(m);
    if (r < 0) r += static_cast<long>(m);
    std::vector<Rational> v(m, Rational(0));
    v[static_cast<size_t>(r)] = 1;
    reduce_mod_phi(v, m);
    CycNumber z;
    z.m_ = m;
    z.c_ = std::move(v);
    return z;
}

CycNumber CycNumber::from_coeffs(std::uint64_t m, std::vector<Rational> coeffs) {
    if (coeffs.size() != totient(m))
        throw std::invalid_argument("from_coeffs: wrong coefficient count");
    CycNumber z;
    z.m_ = m;
    z.c_ = std::move(coeffs);
    return z;
}

bool CycNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value on irrational element");
    return c_[0];
}

CycNumber CycNumber::coerce(std::uint64_t big_m) const {
    if (big_m == m_) return *this;
    if (big_m % m_ != 0)
        throw std::invalid_argument("coerce: target conductor is not a multiple");
    std::uint64_t stride = big_m / m_;
    std::vector<Rational> v(big_m, Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) v[j * stride] = c_[j];
    reduce_mod_phi(v, big_m);
    CycNumber z;
    z.m_ = big_m;
    z.c_ = std::move(v);
    return z;
}

std::optional<CycNumber> CycNumber::demote(std::uint64_t small_m) const {
    if (small_m == m_) return *this;
    if (m_ % small_m != 0)
        throw std::invalid_argument("demote: target conductor does not divide");
    const size_t rows = c_.size();             // phi(m)
    const size_t cols = totient(small_m);      // phi(small_m)
    // Columns: coordinates of zeta_small^j expressed at conductor m.
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (size_t j = 0; j < cols; ++j) {
        CycNumber basis = root_of_unity(small_m, static_cast<long>(j)).coerce(m_);
        for (size_t i = 0; i < rows; ++i) aug[i][j] = basis.coeffs()[i];
    }
    for (size_t i = 0; i < rows; ++i) aug[i][cols] = c_[i];

    // Gaussian elimination; the system is overdetermined and must be exact.
    std::vector<long> pivot_col_of_row(rows, -1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && aug[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(aug[sel], aug[row]);
        Rational p = aug[row][col];
        for (size_t j = col; j <= cols; ++j) aug[row][j] /= p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (size_t j = col; j <= cols; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col_of_row[row] = static_cast<long>(col);
        ++row;
    }
    for (size_t i = row; i < rows; ++i)
        if (aug[i][cols] != 0) return std::nullopt; // inconsistent: not in subfield
    std::vector<Rational> sol(cols, Rational(0));
    for (size_t i = 0; i < row; ++i)
        sol[static_cast<size_t>(pivot_col_of_row[i])] = aug[i][cols];
    return from_coeffs(small_m, std::move(sol));
}

CycNumber CycNumber::galois(std::uint64_t k) const {
    if (gcd_u64(k % m_, m_) != 1 && m_ > 1)
        throw std::invalid_argument("galois: exponent not coprime to conductor");
    std::vector<Rational> v(m_, Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) v[(j * k) % m_] += c_[j];
    reduce_mod_phi(v, m_);
    CycNumber z;
    z.m_ = m_;
    z.c_ = std::move(v);
    return z;
}

CycNumber CycNumber::conj() const {
    if (m_ <= 2) return *this;
    return galois(m_ - 1);
}

CycNumber CycNumber::operator-() const {
    CycNumber z = *this;
    for (auto& c : z.c_) c = -c;
    return z;
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    std::uint64_t m = lcm_u64(a.m_, b.m_);
    CycNumber x = a.coerce(m), y = b.coerce(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) {
    std::uint64_t m = lcm_u64(a.m_, b.m_);
    CycNumber x = a.coerce(m), y = b.coerce(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    std::uint64_t m = lcm_u64(a.m_, b.m_);
    CycNumber x = a.coerce(m), y = b.coerce(m);
    std::vector<Rational> v(2 * x.c_.size(), Rational(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j] == 0) continue;
            v[i + j] += x.c_[i] * y.c_[j];
        }
    }
    reduce_mod_phi(v, m);
    CycNumber z;
    z.m_ = m;
    z.c_ = std::move(v);
    return z;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
    if (m_ == 1) {
        CycNumber z = *this;
        z.c_[0] = Rational(1) / z.c_[0];
        return z;
    }
    CycNumber z;
    z.m_ = m_;
    z.c_ = invert_mod_phi(c_, m_);
    return z;
}

CycNumber operator/(const CycNumber& a, const CycNumber& b) {
    std::uint64_t m = lcm_u64(a.m_, b.m_);
    return a.coerce(m) * b.coerce(m).inverse();
}

CycNumber CycNumber::pow(long k) const {
    if (k == 0) return one(m_);
    if (k < 0) return inverse().pow(-k);
    CycNumber acc = one(m_), sq = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc = acc * sq;
        sq = (e >>= 1) ? sq * sq : sq;
    }
    return acc;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    std::uint64_t m = lcm_u64(a.m_, b.m_);
    return a.coerce(m).c_ == b.coerce(m).c_;
}

std::string CycNumber::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << "(" << c_[i].get_str() << ")";
        if (i) os << "*z^" << i;
    }
    return os.str();
}

CycNumber CycNumber::from_string(const std::string& s, std::uint64_t m) {
    std::vector<Rational> coeffs(totient(m), Rational(0));
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("CycNumber::from_string: " + why);
    };
    auto skip_ws = [&] {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    };
    for (size_t idx = 0; idx < coeffs.size(); ++idx) {
        skip_ws();
        if (idx > 0) {
            if (pos >= s.size() || s[pos] != '+') fail("expected '+'");
            ++pos;
            skip_ws();
        }
        if (pos >= s.size() || s[pos] != '(') fail("expected '('");
        size_t close = s.find(')', pos);
        if (close == std::string::npos) fail("unbalanced parenthesis");
        coeffs[idx] = rational_from_string(s.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        if (idx > 0) {
            std::string tag = "*z^" + std::to_string(idx);
            if (s.compare(pos, tag.size(), tag) != 0) fail("expected " + tag);
            pos += tag.size();
        }
    }
    skip_ws();
    if (pos != s.size()) fail("trailing data");
    return from_coeffs(m, std::move(coeffs));
}

std::string CycNumber::field_header() const {
    if (m_ == 1) return "field: Q";
    return "field: Q(zeta_" + std::to_string(m_) + ")";
}

CycNumber primitive_root_in(std::uint64_t m, std::uint64_t p) {
    if (m % p != 0)
        throw std::invalid_argument("primitive_root_in: p does not divide conductor");
    return CycNumber::root_of_unity(m, static_cast<long>(m / p));
}

} // namespace solvrep
