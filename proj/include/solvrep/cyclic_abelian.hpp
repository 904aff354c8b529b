#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "solvrep/grpalg.hpp"
#include "solvrep/poly.hpp"
#include "solvrep/representation.hpp"

namespace solvrep {

/// Monic irreducible factors of Phi_d over Q (conductor 1) or Q(zeta_m).
/// Over Q the factor is Phi_d itself; over Q(zeta_m) the factors are the
/// Galois-orbit products of (X - zeta_d^j) under the subgroup fixing the
/// coefficient field.  Factors are ordered by their minimal root exponent.
std::vector<Poly> factor_cyclotomic(std::uint64_t d, std::uint64_t field_conductor);

/// Monic irreducible factors of X^n - 1 over the field, ordered by divisor
/// d of n ascending, then by minimal root exponent.  Their product is
/// exactly X^n - 1.
std::vector<Poly> factor_xn_minus_1(std::uint64_t n, std::uint64_t field_conductor);

/// Canonical generator of a cyclic group: the minimal element (in the
/// canonical element order) whose order is |G|.  Throws NotCyclic.
std::size_t cyclic_generator(const Group& g);

/// Representation of the cyclic group sending the canonical generator to
/// the companion matrix of f; f must divide X^|G| - 1 exactly.
Representation companion_rep(const Poly& f, std::shared_ptr<const Group> group);

/// Power sums of the inverse roots of f (computed from f's coefficients
/// by Newton's identities; no radicals), divided by n: the coefficient
/// list of the primitive central idempotent attached to f in F[C_n].
std::vector<CycNumber> newton_pci_coefficients(const Poly& f, std::uint64_t n);

/// The idempotent itself, expressed in powers of the canonical generator.
AlgebraElement cyclic_pci_from_factor(const Poly& f, std::shared_ptr<const Group> group);

/// For G = C_(p^n) in tower form (x_1^p = 1, x_i^p = x_(i-1)) and a root
/// of unity zeta with zeta^(p^n) = 1: the n factors
/// e_(zeta_i^-1 x_i) = (1/p) sum_k zeta_i^-k x_i^k with zeta_n = zeta and
/// zeta_(i-1) = zeta_i^p.  Each factor has p terms; their product is the
/// p^n-term idempotent (1/p^n) sum zeta^-i x_n^i.
std::vector<AlgebraElement> ppower_pci_factorization(std::shared_ptr<const Group> group,
                                                     const CycNumber& zeta);

struct CrtFactor {
    std::uint64_t prime;
    AlgebraElement factor;
};

/// For a cyclic group of order N and zeta^N = 1: the factorization of
/// e_zeta across the primary decomposition G = prod G_p, one factor per
/// prime dividing N, with matched generators y_p and roots zeta_p.
std::vector<CrtFactor> crt_pci_factorization(std::shared_ptr<const Group> group,
                                             const CycNumber& zeta);

/// One simple component of F[G] for abelian G: the kernel of the cyclic
/// quotient it factors through, the irreducible faithful factor, the
/// pulled-back primitive central idempotent and the matched irreducible
/// representation.
struct AbelianComponent {
    Group::CyclicKernel kernel;
    Poly factor;
    AlgebraElement pci;
    Representation rep;
};

/// Complete decomposition of F[G] (abelian G) over Q (conductor 1) or
/// Q(zeta_m): every primitive central idempotent is the pull back
/// e_K * lift of a faithful-factor idempotent of F[G/K].
std::vector<AbelianComponent> abelian_decomposition(std::shared_ptr<const Group> group,
                                                    std::uint64_t field_conductor);

std::vector<AlgebraElement> abelian_pcis(std::shared_ptr<const Group> group,
                                         std::uint64_t field_conductor);
std::vector<Representation> abelian_irreps(std::shared_ptr<const Group> group,
                                           std::uint64_t field_conductor);

} // namespace solvrep
