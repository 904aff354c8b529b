#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "solvrep/errors.hpp"

namespace solvrep {

/// Unreduced word over the generators: (generator index, exponent) pairs,
/// exponents arbitrary integers.  Index 0 is the first generator.
struct Word {
    std::vector<std::pair<std::size_t, long>> letters;
};

/// A finite solvable group given by generators along a subnormal series
/// with prime cyclic quotients: power relations x_i^{p_i} = w_i and
/// conjugation relations x_i^-1 x_j x_i = w_ij (j < i), every relation
/// word using only generators of strictly smaller index.
struct LongPresentation {
    struct Generator {
        std::string symbol;
        std::uint64_t prime;
    };

    std::string name;
    std::vector<Generator> generators;
    std::vector<Word> power_words;               // one per generator
    std::vector<std::vector<Word>> conj_words;   // conj_words[i][j], j < i

    std::size_t size() const { return generators.size(); }
    /// Index of a generator symbol, or npos.
    std::size_t index_of(const std::string& symbol) const;
    /// Parses a word in this presentation's symbols ("y z^-1 t^2" or "1").
    Word parse_word(const std::string& text) const;
};

/// Parses the presentation file grammar; checks structural constraints
/// (declared primes, index bounds) but does not certify consistency.
LongPresentation parse_presentation(const std::string& text);
LongPresentation parse_presentation_file(const std::string& path);

/// Normal-form element x_1^(a_1) ... x_n^(a_n), 0 <= a_i < p_i.
struct GroupElement {
    std::vector<int> exps;

    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

struct ValidationOptions {
    std::uint64_t max_order = 5000;
    /// Associativity is checked on all triples when order^3 is at most
    /// this cap, and on a deterministic sample of this size otherwise.
    std::uint64_t associativity_cap = 2'000'000;
};

class Group;

struct ValidationReport {
    std::uint64_t order = 0;
    std::uint64_t exponent = 0;
    std::uint64_t associativity_triples_checked = 0;
    std::shared_ptr<const Group> group;
};

/// Certifies consistency by building the full multiplication table over
/// all prod(p_i) normal forms and exhaustively checking relations,
/// Latin-square structure and associativity (up to the configured cap).
/// Throws InconsistentPresentation or SizeExceeded.
ValidationReport validate(const LongPresentation& lp, const ValidationOptions& opts = {});

/// Convenience: parse + validate.
ValidationReport load_group_file(const std::string& path, const ValidationOptions& opts = {});

/// Validated group: immutable tables, safe for concurrent readers.
/// Elements are identified by their lexicographic rank among exponent
/// vectors; 0 is the identity.
class Group {
public:
    const LongPresentation& presentation() const { return lp_; }
    std::size_t order() const { return order_; }
    std::uint64_t exponent() const { return exponent_; }
    std::size_t num_generators() const { return lp_.size(); }

    std::size_t identity() const { return 0; }
    std::size_t generator(std::size_t i) const; // element index of x_(i+1)

    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
    std::size_t inv(std::size_t a) const { return inv_[a]; }
    std::size_t power(std::size_t a, long k) const;
    std::size_t conjugate(std::size_t a, std::size_t g) const; // g^-1 a g
    std::uint64_t element_order(std::size_t a) const { return elem_order_[a]; }

    GroupElement element(std::size_t idx) const;
    std::size_t index_of(const GroupElement& e) const;
    std::size_t normalize(const Word& w) const;
    /// Renders an element as a word string ("x y^2", identity is "1").
    std::string element_word(std::size_t idx) const;

    // -- subnormal series -------------------------------------------------
    /// Number of levels n; G_k is generated by the first k generators.
    std::size_t levels() const { return lp_.size(); }
    std::uint64_t level_order(std::size_t k) const;
    bool in_level(std::size_t idx, std::size_t k) const;
    std::vector<std::size_t> level_elements(std::size_t k) const;

    // -- structure queries -------------------------------------------------
    bool is_abelian() const { return abelian_; }
    /// Classes of G_k under G_k-conjugation, canonically ordered
    /// (ascending minimal representative; members ascending).
    std::vector<std::vector<std::size_t>> conjugacy_classes(std::size_t level) const;
    std::vector<std::vector<std::size_t>> conjugacy_classes() const {
        return conjugacy_classes(levels());
    }
    /// Derived subgroup G' as a sorted element list.
    std::vector<std::size_t> derived_subgroup() const;

    struct Abelianization {
        /// Invariant factors > 1 in divisibility order; empty for trivial.
        std::vector<std::uint64_t> invariant_factors;
        /// Quotient coordinates of every element, one entry per factor.
        std::vector<std::vector<std::uint64_t>> image;
    };
    const Abelianization& abelianization() const { return ab_; }

    struct CyclicKernel {
        std::vector<std::size_t> kernel; // sorted element indices
        std::uint64_t d;                 // |G/K|
        std::size_t coset_generator;     // minimal x whose coset generates G/K
        /// Power of the chosen coset generator representing each element's
        /// coset: element g lies in (coset_generator)^power_of[g] * K.
        std::vector<std::uint64_t> power_of;
    };
    /// All subgroups K with G/K cyclic (abelian groups only), each exactly
    /// once, ordered by quotient size then kernel content.
    std::vector<CyclicKernel> cyclic_quotient_kernels() const;

private:
    friend ValidationReport validate(const LongPresentation&, const ValidationOptions&);
    Group() = default;

    LongPresentation lp_;
    std::size_t order_ = 1;
    std::uint64_t exponent_ = 1;
    std::vector<std::uint64_t> primes_;
    std::vector<std::size_t> stride_; // stride_[i] = prod of primes after level i+1
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint32_t> elem_order_;
    bool abelian_ = true;
    Abelianization ab_;
};

} // namespace solvrep
