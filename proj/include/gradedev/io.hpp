#pragma once

#include "gradedev/monomial_ideal.hpp"
#include "gradedev/rational_function.hpp"

#include <string>

namespace gradedev {

/// Parse "x1^2, x1*x2, x3^2" (T1/T2/.. and bare x,y,z,w also accepted) into a
/// monomial ideal in n variables.  An empty string is the zero ideal.
MonomialIdeal parse_ideal(const std::string& text, unsigned n,
                          MonomialIdeal::DegreePolicy policy = MonomialIdeal::DegreePolicy::Warn);

/// Parse an integer polynomial expression in z, e.g.
/// "(z-1)*(z^6-3*z^5+z^4+5*z^3-5*z^2+4*z-1)" or "-(z^2-z+1)^5".
IntPolynomial parse_polynomial(const std::string& text);

/// Parse "num / den" with a single top-level slash; a missing slash means a
/// polynomial (denominator 1).
RationalFunction parse_rational_function(const std::string& text);

} // namespace gradedev
