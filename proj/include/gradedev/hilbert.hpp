#pragma once

#include "gradedev/monomial_ideal.hpp"
#include "gradedev/rational_function.hpp"

#include <cstdint>
#include <vector>

namespace gradedev {

/// Hilbert series data of S/I:
///   HS = k_polynomial / (1-z)^n = h_polynomial / (1-z)^dimension,
/// with h_polynomial(1) != 0.
struct HilbertData {
    IntPolynomial k_polynomial;
    unsigned dimension = 0;
    IntPolynomial h_polynomial;
};

/// Numerator of HS_{S/I} over (1-z)^n, by the generator-splitting recursion
/// K(I) = K(I') - z^deg(m) * K(I' : m).  Pivot: highest degree, ties broken
/// lex-largest.
IntPolynomial k_polynomial(const MonomialIdeal& ideal);

HilbertData hilbert_data(const MonomialIdeal& ideal);

RationalFunction hilbert_series(const MonomialIdeal& ideal);

/// dim_k (S/I)_d by exhaustive monomial enumeration (quotient convention).
/// Deliberately independent of the K-polynomial recursion.
std::uint64_t hilbert_function(const MonomialIdeal& ideal, unsigned degree);

/// HF_{S/I}(0..max_degree) via series expansion of K/(1-z)^n (fast route).
std::vector<Int> hilbert_function_values(const MonomialIdeal& ideal, unsigned max_degree);

} // namespace gradedev
