#pragma once

#include "gradedev/poincare.hpp"
#include "gradedev/sturm.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace gradedev {

/// Exponential growth profile: deviations behave like b * rho^i / i.
/// rho is carried as an exact rational bracket; the float is a convenience.
struct GrowthProfile {
    Rat rho_lo;
    Rat rho_hi;
    unsigned multiplicity_b = 1;
    Rat root_lo; ///< bracket of the radius r = 1/rho
    Rat root_hi;

    Real rho() const { return to_real((rho_lo + rho_hi) / 2); }
    nlohmann::json to_json() const;
};

/// Growth rate for a Golod denominator v(z) = 1 - sum_{i>=1} beta_i z^(i+1):
/// the unique root r in (0,1) located by bisection with an exact sign-change
/// certificate v(lo) > 0 > v(hi); rho = 1/r, b = 1.  Requires beta_1 and
/// beta_2 positive (HypothesisViolated otherwise: principal or CI-like input).
GrowthProfile golod_rho(const IntPolynomial& v);

/// Growth rate from an h-polynomial with h(0) = 1: -r is the minimum-modulus
/// real root, b its exact multiplicity, rho = 1/r.  Uniqueness of the
/// minimum-modulus root among complex roots is certified only when all roots
/// are real (Sturm count = degree); otherwise MinModulusNotCertified.
GrowthProfile koszul_growth(const IntPolynomial& h);

enum class Verdict { Pass, Fail, Refused };

std::string verdict_name(Verdict v);

/// Convergence diagnostic for eps_i ~ b rho^i / i over a window [lo, hi].
struct GrowthDiagnostic {
    unsigned window_lo = 0;
    unsigned window_hi = 0;
    Rat tolerance;
    /// Exact interval for i*eps_i / (b*rho^i) per window index.
    std::vector<Rat> ratio_lo;
    std::vector<Rat> ratio_hi;
    /// Upper bound on |ratio - 1| per window index.
    std::vector<Rat> deviation;
    Verdict verdict = Verdict::Refused;
    /// Trailing 5-window maxima of |ratio - 1| are non-increasing over the
    /// last five indices (convergence-envelope trend).
    bool envelope_monotone = false;
    /// Literal per-index |ratio - 1| non-increasing over the last five
    /// indices.  Informational: false for generic inputs because divisor
    /// terms in the extraction oscillate between even and odd indices.
    bool pointwise_monotone = false;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// PASS iff |ratio - 1| <= tolerance at the window end and the maximum over
/// the last five indices is <= 2 * tolerance (exact interval arithmetic on
/// the rho bracket).  Refuses sequences that vanish inside the window
/// (complete intersections have no growth rate).
GrowthDiagnostic growth_diagnostic(const DeviationSequence& eps, const GrowthProfile& profile,
                                   unsigned window_lo, unsigned window_hi,
                                   const Rat& tolerance);

} // namespace gradedev
