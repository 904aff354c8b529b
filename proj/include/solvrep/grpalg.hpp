#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "solvrep/cyclotomic.hpp"
#include "solvrep/presentation.hpp"

namespace solvrep {

/// Sparse element of the group algebra F[G] with F = Q (conductor 1) or
/// Q(zeta_m).  Terms are keyed by the canonical element index; zero
/// coefficients are never stored.  Mixed conductors promote automatically.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(std::shared_ptr<const Group> group, std::uint64_t conductor = 1)
        : group_(std::move(group)), m_(conductor) {}

    static AlgebraElement zero(std::shared_ptr<const Group> g, std::uint64_t m = 1);
    static AlgebraElement unit(std::shared_ptr<const Group> g, std::uint64_t m = 1);
    /// Singleton g with coefficient 1.
    static AlgebraElement of_element(std::shared_ptr<const Group> g, std::size_t idx,
                                     std::uint64_t m = 1);

    const std::shared_ptr<const Group>& group() const { return group_; }
    std::uint64_t conductor() const { return m_; }
    const std::map<std::size_t, CycNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    CycNumber coeff(std::size_t idx) const;
    void set_coeff(std::size_t idx, const CycNumber& c);

    AlgebraElement coerce(std::uint64_t m) const;

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement scale(const CycNumber& c) const;
    AlgebraElement& operator+=(const AlgebraElement& b) { return *this = *this + b; }
    AlgebraElement& operator-=(const AlgebraElement& b) { return *this = *this - b; }
    AlgebraElement& operator*=(const AlgebraElement& b) { return *this = *this * b; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    AlgebraElement pow(long k) const;
    /// g^-1 * a * g, coefficients unchanged.
    AlgebraElement conjugated_by(std::size_t g) const;

    bool is_idempotent() const;
    /// Central in F[G_level]; checks conjugation by the first `level`
    /// generators (which generate the subgroup).
    bool is_central(std::size_t level) const;
    bool is_central() const;

    /// One line per term, lexicographic by exponent vector:
    /// "[a1 a2 ... an] (c0) + (c1)*z^1 ..." prefixed by a header line.
    std::string to_string() const;
    static AlgebraElement from_string(const std::string& text,
                                      std::shared_ptr<const Group> group);

private:
    std::shared_ptr<const Group> group_;
    std::uint64_t m_ = 1;
    std::map<std::size_t, CycNumber> terms_;
};

/// Sum of the elements of a conjugacy class, coefficient 1 each.
AlgebraElement class_sum(std::shared_ptr<const Group> g,
                         const std::vector<std::size_t>& cls, std::uint64_t m = 1);

/// Averaging idempotent e_H = (1/|H|) sum_{h in H} h.  H must be closed
/// under the group operation (throws NotASubgroup otherwise).
AlgebraElement avg_idempotent(std::shared_ptr<const Group> g,
                              const std::vector<std::size_t>& subgroup,
                              std::uint64_t m = 1);

struct DeltaDecomposition {
    /// Central idempotent e_G' projecting onto the commutative part
    /// F[G]e_G' (isomorphic to F[G/G']); the complement ideal
    /// (1 - e_G')F[G] is the sum of the noncommutative components.
    AlgebraElement commutative_projector;
    std::uint64_t commutative_dimension = 0; // |G/G'|
    bool has_noncommutative_part = false;
};

DeltaDecomposition delta_decomposition(std::shared_ptr<const Group> g, std::uint64_t m = 1);

} // namespace solvrep
