#pragma once

#include "gradedev/numeric.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gradedev {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// index = degree.  The highest stored coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
class IntPolynomial {
public:
    IntPolynomial() = default; // zero polynomial
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<Int> coeffs);

    static IntPolynomial constant(Int c);
    /// c * z^deg
    static IntPolynomial term(Int c, std::size_t deg);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of z^i (zero beyond the stored range).
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& c) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    IntPolynomial pow(unsigned e) const;
    IntPolynomial derivative() const;
    /// f(z) -> f(-z)
    IntPolynomial compose_scale() const;

    Int evaluate(const Int& x) const;
    Rat evaluate(const Rat& x) const;

    /// Exact quotient; throws InexactDivision when the remainder is nonzero
    /// or the quotient is not integral.
    IntPolynomial divexact(const IntPolynomial& d) const;
    bool divisible_by(const IntPolynomial& d) const;

    /// Multiplicity of z = 1 as a root.
    unsigned vanishing_order_at_one() const;

    /// GCD of all coefficients (positive; 0 for the zero polynomial).
    Int content() const;
    /// this / content, with positive leading coefficient.
    IntPolynomial primitive_part() const;

    std::string to_string(std::string_view var = "z") const;
    nlohmann::json to_json() const;
    static IntPolynomial from_json(const nlohmann::json& j);

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Primitive gcd with positive leading coefficient; gcd(0, g) = primitive g.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

} // namespace gradedev
