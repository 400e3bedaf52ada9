#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gradedev {

// Exact coefficient types used throughout the library.  All ring arithmetic
// is done in Int/Rat; Real is a convenience type for reporting and for the
// closed-form trigonometric root values (50 decimal digits).
using Int  = boost::multiprecision::cpp_int;
using Rat  = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

/// n choose k for arbitrary-precision n >= 0.
Int binomial(const Int& n, std::uint64_t k);

/// Mobius function of m >= 1.
int mobius(std::uint64_t m);

/// All divisors of m >= 1, increasing.
std::vector<std::uint64_t> divisors(std::uint64_t m);

Real to_real(const Rat& q);

bool fits_int64(const Int& v);

/// Decimal string; rationals print as "p/q" (or "p" when q == 1).
std::string to_decimal_string(const Int& v);
std::string to_decimal_string(const Rat& q);

} // namespace gradedev
