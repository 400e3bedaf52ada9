#pragma once

#include "gradedev/rational_function.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <vector>

namespace gradedev {

/// Power series truncated at a fixed order N: exactly the coefficients
/// c_0 .. c_N, all arithmetic closed at order N, exact rationals.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order); // zero series
    TruncatedSeries(std::size_t order, std::vector<Rat> coeffs);
    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return order_; }
    const Rat& coeff(std::size_t i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    TruncatedSeries truncate(std::size_t lower_order) const;

    /// Coefficientwise <=; orders must agree.
    bool dominated_by(const TruncatedSeries& o) const;

    nlohmann::json to_json() const;

private:
    void check_same_order(const TruncatedSeries& o) const;
    std::size_t order_;
    std::vector<Rat> coeffs_;
};

/// Maclaurin expansion of f to the given order by exact long division.
/// Throws DenominatorVanishesAtZero when f.den(0) == 0.
TruncatedSeries series_from_rational(const RationalFunction& f, std::size_t order);

TruncatedSeries series_from_polynomial(const IntPolynomial& p, std::size_t order);

/// Formal logarithm; requires constant term 1 (ConstantTermNotOne otherwise).
TruncatedSeries series_log(const TruncatedSeries& s);

/// Formal exponential; requires constant term 0.
TruncatedSeries series_exp(const TruncatedSeries& s);

} // namespace gradedev
