#pragma once

#include "gradedev/hilbert.hpp"
#include "gradedev/series.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gradedev {

enum class Provenance { Golod, Koszul, CompleteIntersection, UserSupplied };

std::string provenance_name(Provenance p);

/// Closed-form Poincare series of the residue field.  Validated on
/// construction: value 1 at the origin and nonnegative integer coefficients
/// up to the check order.
struct PoincareSeries {
    RationalFunction closed_form;
    Provenance provenance;

    static PoincareSeries make(RationalFunction f, Provenance provenance,
                               std::size_t check_order = 32);
    TruncatedSeries expand(std::size_t order) const;
};

/// (1+z)^n / (1 - sum_i beta_i z^(i+1)) from the embedding dimension and the
/// total Betti numbers beta_1.. of the quotient ring over the polynomial ring.
PoincareSeries poincare_golod(unsigned edim, const std::vector<std::uint64_t>& betti_totals);

/// (1+z)^dim / h(-z); throws OddSignPattern if the expansion acquires a
/// negative coefficient within the check order (non-Koszul input).
PoincareSeries poincare_koszul(const HilbertData& hilbert, std::size_t check_order = 32);

/// (1+z)^n / (1-z^2)^c.
PoincareSeries poincare_ci(unsigned edim, unsigned codim);

/// Deviation sequence eps_1..eps_N.  Constructing one validates
/// nonnegativity and the rigidity pattern: no zero entry at index >= 3 may be
/// followed by a nonzero entry.
class DeviationSequence {
public:
    DeviationSequence(std::vector<Int> values, std::string provenance,
                      bool eps1_known = true);

    std::size_t order() const { return values_.size(); }
    /// 1-based access.
    const Int& eps(std::size_t i) const;
    const std::vector<Int>& values() const { return values_; }
    bool eps1_known() const { return eps1_known_; }
    const std::string& provenance() const { return provenance_; }

    /// Termwise <=; orders must agree.  When either side has an unknown
    /// eps_1, index 1 is skipped.
    bool dominated_by(const DeviationSequence& o) const;

    std::string to_text() const;
    nlohmann::json to_json() const;

private:
    std::vector<Int> values_;
    std::string provenance_;
    bool eps1_known_;
};

/// Power sums p_d = sum_j alpha_j^d of the inverse roots of a denominator
/// with constant term 1, via Newton's identities on its coefficients.
struct PowerSums {
    std::vector<Int> p; // p[0] = p_1
    const Int& at(std::size_t d) const { return p.at(d - 1); }
};

PowerSums power_sums(const IntPolynomial& den, std::size_t order);

/// Extract deviations from the series expansion: with Q(z) = P(-z) and
/// c_M = M [z^M](-log Q), solve sum_{d|M} (-1)^(d+1) d eps_d = c_M.
DeviationSequence deviations_from_series(const PoincareSeries& p, std::size_t order);

/// Mobius/Newton route for P = (1+z)^c / den:
///   eps_i = ((-1)^i / i) sum_{d|i} mu(i/d) p_d   for i >= 2.
/// eps_1 is not produced by the formula; it is injected from the caller's
/// embedding dimension (or marked absent).
DeviationSequence deviations_mobius(const IntPolynomial& den, unsigned c, std::size_t order,
                                    std::optional<std::uint64_t> eps1);

/// Expand prod (1+z^(2i-1))^eps_(2i-1) / (1-z^(2i))^eps_(2i) to the order.
TruncatedSeries betti_k_from_deviations(const DeviationSequence& eps, std::size_t order);

bool dominance(const TruncatedSeries& a, const TruncatedSeries& b);
bool dominance(const DeviationSequence& a, const DeviationSequence& b);

namespace detail {
/// Raw extracted values before integrality/nonnegativity validation;
/// used by property tests to compare the two extraction routes.
std::vector<Rat> deviation_rationals_from_series(const RationalFunction& f, std::size_t order);
std::vector<Rat> deviation_rationals_mobius(const IntPolynomial& den, std::size_t order);
} // namespace detail

} // namespace gradedev
