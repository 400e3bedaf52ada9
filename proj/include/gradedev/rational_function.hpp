#pragma once

#include "gradedev/polynomial.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace gradedev {

/// Quotient of integer polynomials.  Not kept reduced; equality testing is
/// reduction-invariant (cross-multiplication).  Expansion as a power series
/// at the origin additionally requires den(0) != 0.
struct RationalFunction {
    IntPolynomial num;
    IntPolynomial den;

    RationalFunction(IntPolynomial n, IntPolynomial d);
    static RationalFunction polynomial(IntPolynomial p);

    bool expandable_at_origin() const { return den.coeff(0) != 0; }
    /// num(0)/den(0); requires den(0) != 0.
    Rat value_at_zero() const;

    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction reciprocal() const;
    /// f(z) -> f(-z)
    RationalFunction compose_scale() const;

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Cancel the polynomial gcd and normalize den(0) > 0 (when nonzero).
    RationalFunction reduced() const;

    std::string to_string(std::string_view var = "z") const;
    nlohmann::json to_json() const;
    static RationalFunction from_json(const nlohmann::json& j);
};

} // namespace gradedev
