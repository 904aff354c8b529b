#include "solvrep/grpalg.hpp"

#include <algorithm>
#include <sstream>

namespace solvrep {

AlgebraElement AlgebraElement::zero(std::shared_ptr<const Group> g, std::uint64_t m) {
    return AlgebraElement(std::move(g), m);
}

AlgebraElement AlgebraElement::unit(std::shared_ptr<const Group> g, std::uint64_t m) {
    AlgebraElement a(g, m);
    a.terms_[g->identity()] = CycNumber::one(m);
    return a;
}

AlgebraElement AlgebraElement::of_element(std::shared_ptr<const Group> g, std::size_t idx,
                                          std::uint64_t m) {
    AlgebraElement a(g, m);
    a.terms_[idx] = CycNumber::one(m);
    return a;
}

CycNumber AlgebraElement::coeff(std::size_t idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? CycNumber::zero(m_) : it->second;
}

void AlgebraElement::set_coeff(std::size_t idx, const CycNumber& c) {
    if (c.is_zero()) {
        terms_.erase(idx);
        return;
    }
    std::uint64_t m = lcm_u64(m_, c.conductor());
    if (m != m_) {
        m_ = m;
        for (auto& [k, w] : terms_) w = w.coerce(m_);
    }
    terms_[idx] = c.coerce(m_);
}

AlgebraElement AlgebraElement::coerce(std::uint64_t m) const {
    AlgebraElement a(group_, m);
    for (const auto& [k, v] : terms_) a.terms_[k] = v.coerce(m);
    return a;
}

namespace {

void check_same_group(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.group() && b.group() && a.group() != b.group())
        throw GroupMismatch("algebra elements over different groups");
}

} // namespace

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement a(group_, m_);
    for (const auto& [k, v] : terms_) a.terms_[k] = -v;
    return a;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_group(a, b);
    std::uint64_t m = lcm_u64(a.m_, b.m_);
    AlgebraElement r = a.coerce(m);
    r.group_ = a.group_ ? a.group_ : b.group_;
    for (const auto& [k, v] : b.terms_) {
        CycNumber s = r.coeff(k) + v.coerce(m);
        if (s.is_zero())
            r.terms_.erase(k);
        else
            r.terms_[k] = s;
    }
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_group(a, b);
    std::uint64_t m = lcm_u64(a.m_, b.m_);
    const Group& G = *(a.group_ ? a.group_ : b.group_);
    AlgebraElement r(a.group_ ? a.group_ : b.group_, m);
    std::map<std::size_t, CycNumber> acc;
    for (const auto& [g, x] : a.terms_) {
        CycNumber xc = x.coerce(m);
        for (const auto& [h, y] : b.terms_) {
            std::size_t gh = G.mul(g, h);
            CycNumber add = xc * y.coerce(m);
            auto it = acc.find(gh);
            if (it == acc.end())
                acc.emplace(gh, add);
            else
                it->second += add;
        }
    }
    for (auto& [k, v] : acc)
        if (!v.is_zero()) r.terms_.emplace(k, std::move(v));
    return r;
}

AlgebraElement AlgebraElement::scale(const CycNumber& c) const {
    if (c.is_zero()) return AlgebraElement(group_, m_);
    std::uint64_t m = lcm_u64(m_, c.conductor());
    AlgebraElement r(group_, m);
    CycNumber cc = c.coerce(m);
    for (const auto& [k, v] : terms_) r.terms_[k] = v.coerce(m) * cc;
    return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_group(a, b);
    std::uint64_t m = lcm_u64(a.m_, b.m_);
    AlgebraElement x = a.coerce(m), y = b.coerce(m);
    return x.terms_ == y.terms_;
}

AlgebraElement AlgebraElement::pow(long k) const {
    if (k < 0) throw std::invalid_argument("AlgebraElement::pow: negative exponent");
    AlgebraElement acc = unit(group_, m_), sq = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e) sq = sq * sq;
    }
    return acc;
}

AlgebraElement AlgebraElement::conjugated_by(std::size_t g) const {
    AlgebraElement r(group_, m_);
    for (const auto& [k, v] : terms_) r.terms_[group_->conjugate(k, g)] = v;
    return r;
}

bool AlgebraElement::is_idempotent() const { return *this * *this == *this; }

bool AlgebraElement::is_central(std::size_t level) const {
    for (std::size_t i = 0; i < level; ++i)
        if (conjugated_by(group_->generator(i)) != *this) return false;
    return true;
}

bool AlgebraElement::is_central() const { return is_central(group_->num_generators()); }

std::string AlgebraElement::to_string() const {
    std::ostringstream os;
    os << "algebra_element group=" << group_->presentation().name << " conductor=" << m_
       << " terms=" << terms_.size() << "\n";
    for (const auto& [k, v] : terms_) {
        GroupElement e = group_->element(k);
        os << "[";
        for (std::size_t i = 0; i < e.exps.size(); ++i) {
            if (i) os << " ";
            os << e.exps[i];
        }
        os << "] " << v.to_string() << "\n";
    }
    return os.str();
}

AlgebraElement AlgebraElement::from_string(const std::string& text,
                                           std::shared_ptr<const Group> group) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("AlgebraElement::from_string: empty input");
    std::uint64_t m = 1;
    std::size_t count = 0;
    {
        std::istringstream hs(line);
        std::string word;
        hs >> word;
        if (word != "algebra_element")
            throw std::invalid_argument("AlgebraElement::from_string: bad header");
        while (hs >> word) {
            auto eq = word.find('=');
            if (eq == std::string::npos) continue;
            std::string key = word.substr(0, eq), val = word.substr(eq + 1);
            if (key == "conductor") m = std::stoull(val);
            if (key == "terms") count = std::stoull(val);
        }
    }
    AlgebraElement a(group, m);
    for (std::size_t t = 0; t < count; ++t) {
        if (!std::getline(in, line))
            throw std::invalid_argument("AlgebraElement::from_string: missing term line");
        auto close = line.find(']');
        if (line.empty() || line[0] != '[' || close == std::string::npos)
            throw std::invalid_argument("AlgebraElement::from_string: bad term line");
        GroupElement e;
        {
            std::istringstream es(line.substr(1, close - 1));
            int x;
            while (es >> x) e.exps.push_back(x);
        }
        if (e.exps.size() != group->num_generators())
            throw std::invalid_argument("AlgebraElement::from_string: exponent count");
        std::string coeff = line.substr(close + 1);
        if (!coeff.empty() && coeff[0] == ' ') coeff.erase(0, 1);
        a.terms_[group->index_of(e)] = CycNumber::from_string(coeff, m);
    }
    return a;
}

AlgebraElement class_sum(std::shared_ptr<const Group> g, const std::vector<std::size_t>& cls,
                         std::uint64_t m) {
    AlgebraElement a(g, m);
    for (auto e : cls) a.set_coeff(e, CycNumber::one(m));
    return a;
}

AlgebraElement avg_idempotent(std::shared_ptr<const Group> g,
                              const std::vector<std::size_t>& subgroup, std::uint64_t m) {
    if (subgroup.empty()) throw NotASubgroup("empty element set");
    std::vector<bool> in(g->order(), false);
    for (auto e : subgroup) in[e] = true;
    if (!in[g->identity()]) throw NotASubgroup("identity missing");
    for (auto a : subgroup)
        for (auto b : subgroup)
            if (!in[g->mul(a, b)]) throw NotASubgroup("set is not closed under products");

    AlgebraElement r(g, m);
    CycNumber inv_size = CycNumber(Rational(1, static_cast<unsigned long>(subgroup.size())))
                             .coerce(m);
    for (auto e : subgroup) r.set_coeff(e, inv_size);
    return r;
}

DeltaDecomposition delta_decomposition(std::shared_ptr<const Group> g, std::uint64_t m) {
    auto derived = g->derived_subgroup();
    DeltaDecomposition d;
    d.commutative_projector = avg_idempotent(g, derived, m);
    d.commutative_dimension = g->order() / derived.size();
    d.has_noncommutative_part = derived.size() > 1;
    return d;
}

} // namespace solvrep
