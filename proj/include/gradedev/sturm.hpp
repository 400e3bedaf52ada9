#pragma once

#include "gradedev/polynomial.hpp"

#include <vector>

namespace gradedev {

/// Isolating interval for one distinct real root, with exact rational
/// endpoints.  lo == hi means the root was hit exactly.
struct RootBracket {
    IntPolynomial poly;   ///< polynomial the root belongs to
    IntPolynomial factor; ///< squarefree factor containing the root
    Rat lo;
    Rat hi;
    unsigned multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rat midpoint() const { return (lo + hi) / 2; }
    /// [|root| lower, |root| upper] as exact rationals.
    std::pair<Rat, Rat> modulus_interval() const;
};

/// Yun decomposition p = c * prod f_j^j with the f_j squarefree, pairwise
/// coprime, primitive.  Only nonconstant factors are returned.
std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p);

/// Disjoint isolating brackets for every distinct real root of p (with
/// multiplicities from the squarefree decomposition), refined by bisection
/// to width <= `width`.  Sorted by root value.
std::vector<RootBracket> sturm_isolate(const IntPolynomial& p,
                                       const Rat& width = Rat(Int(1), Int(1) << 64));

/// Number of distinct real roots of p.
unsigned distinct_real_root_count(const IntPolynomial& p);

/// True iff every complex root of p is real (root count with multiplicity
/// equals the degree); exact.
bool all_roots_real(const IntPolynomial& p);

/// Distinct real roots of a squarefree polynomial in the open interval
/// (lo, hi), by Sturm counting; endpoints must not be roots.
unsigned count_roots_between(const IntPolynomial& squarefree, const Rat& lo, const Rat& hi);

} // namespace gradedev
