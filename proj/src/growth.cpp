#include "gradedev/growth.hpp"

#include "gradedev/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace gradedev {

namespace {

const Rat kDefaultWidth = Rat(Int(1), Int(1) << 64);

Rat abs_rat(const Rat& v) { return v < 0 ? Rat(-v) : v; }

// One sign-preserving bisection step on the bracket's squarefree factor.
void refine_bracket(RootBracket& b) {
    const Rat mid = (b.lo + b.hi) / 2;
    const Rat vm = b.factor.evaluate(mid);
    if (vm == 0) {
        b.lo = b.hi = mid;
        return;
    }
    const Rat vlo = b.factor.evaluate(b.lo);
    if ((vlo > 0 && vm < 0) || (vlo < 0 && vm > 0))
        b.hi = mid;
    else
        b.lo = mid;
}

} // namespace

nlohmann::json GrowthProfile::to_json() const {
    return nlohmann::json{{"rho_lo", to_decimal_string(rho_lo)},
                          {"rho_hi", to_decimal_string(rho_hi)},
                          {"rho", rho().convert_to<double>()},
                          {"b", multiplicity_b},
                          {"root_lo", to_decimal_string(root_lo)},
                          {"root_hi", to_decimal_string(root_hi)}};
}

GrowthProfile golod_rho(const IntPolynomial& v) {
    // Shape check: v = 1 - sum beta_i z^(i+1).
    if (v.coeff(0) != 1 || v.coeff(1) != 0)
        throw HypothesisViolated("golod_rho: denominator must be 1 - sum beta_i z^(i+1)");
    for (std::size_t k = 2; k <= static_cast<std::size_t>(std::max(0, v.degree())); ++k)
        if (v.coeff(k) > 0)
            throw HypothesisViolated("golod_rho: positive coefficient at z^" +
                                     std::to_string(k));
    const Int beta1 = -v.coeff(2);
    const Int beta2 = -v.coeff(3);
    if (beta1 < 1)
        throw HypothesisViolated("golod_rho: beta_1 = 0");
    if (beta2 < 1)
        throw HypothesisViolated("golod_rho: beta_2 = 0 (principal or CI-like input)");

    // v(0) = 1 > 0 and v(1) = 1 - sum beta_i < 0; v decreases on (0,1).
    Rat lo = 0, hi = 1;
    while (hi - lo > kDefaultWidth) {
        const Rat mid = (lo + hi) / 2;
        const Rat vm = v.evaluate(mid);
        if (vm == 0) {
            // Exact rational root: re-center a width-certified sign bracket.
            const Rat delta = kDefaultWidth / 4;
            lo = mid - delta;
            hi = mid + delta;
            break;
        }
        if (vm > 0)
            lo = mid;
        else
            hi = mid;
    }
    if (!(v.evaluate(lo) > 0 && v.evaluate(hi) < 0))
        throw Error("golod_rho: sign-change certificate failed");
    GrowthProfile profile;
    profile.root_lo = lo;
    profile.root_hi = hi;
    profile.rho_lo = 1 / hi;
    profile.rho_hi = 1 / lo;
    profile.multiplicity_b = 1;
    return profile;
}

GrowthProfile koszul_growth(const IntPolynomial& h) {
    if (h.coeff(0) != 1)
        throw InputError("koszul_growth: h(0) must be 1");
    if (h.degree() < 1)
        throw HypothesisViolated(
            "koszul_growth: h = 1 has no roots (complete intersection; deviations vanish)");

    if (!all_roots_real(h))
        throw MinModulusNotCertified(
            "koszul_growth: h has non-real roots; minimum-modulus uniqueness not certified");

    std::vector<RootBracket> brackets = sturm_isolate(h);
    if (brackets.empty())
        throw MinModulusNotCertified("koszul_growth: no real roots isolated");

    // Select the bracket of minimum modulus; refine until the choice is
    // unambiguous.  Distinct real roots share a modulus only as a +-pair, so
    // refinement separates everything except a genuine tie.
    auto lower = [](const RootBracket& b) { return b.modulus_interval().first; };
    auto upper = [](const RootBracket& b) { return b.modulus_interval().second; };
    for (int round = 0; round < 512; ++round) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < brackets.size(); ++i)
            if (lower(brackets[i]) < lower(brackets[best])) best = i;
        bool ambiguous = false;
        for (std::size_t i = 0; i < brackets.size(); ++i) {
            if (i == best) continue;
            if (lower(brackets[i]) < upper(brackets[best])) {
                ambiguous = true;
                if (!brackets[i].exact()) refine_bracket(brackets[i]);
                if (!brackets[best].exact()) refine_bracket(brackets[best]);
            }
        }
        if (!ambiguous) {
            const RootBracket& b = brackets[best];
            if (b.hi >= 0)
                throw MinModulusNotCertified(
                    "koszul_growth: minimum-modulus real root is not negative");
            // A +-pair tie would put a root of gcd(h(z), h(-z)) inside the
            // winning bracket.
            const IntPolynomial sym = poly_gcd(h, h.compose_scale());
            if (sym.degree() >= 1) {
                bool tie;
                if (b.exact())
                    tie = (sym.evaluate(b.lo) == 0);
                else
                    tie = count_roots_between(sym, b.lo, b.hi) > 0;
                if (tie)
                    throw MinModulusNotCertified(
                        "koszul_growth: +-pair ties for minimum modulus");
            }
            GrowthProfile profile;
            profile.multiplicity_b = b.multiplicity;
            // root is -r with r = |root|
            auto [mlo, mhi] = b.modulus_interval();
            if (mlo == 0)
                throw Error("koszul_growth: degenerate modulus bracket");
            profile.root_lo = mlo;
            profile.root_hi = mhi;
            profile.rho_lo = 1 / mhi;
            profile.rho_hi = 1 / mlo;
            return profile;
        }
    }
    throw MinModulusNotCertified("koszul_growth: modulus comparison did not separate");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Refused: return "REFUSED";
    }
    return "REFUSED";
}

GrowthDiagnostic growth_diagnostic(const DeviationSequence& eps, const GrowthProfile& profile,
                                   unsigned window_lo, unsigned window_hi,
                                   const Rat& tolerance) {
    if (window_lo < 1 || window_lo > window_hi)
        throw InputError("growth_diagnostic: bad window");
    if (window_hi > eps.order())
        throw InputError("growth_diagnostic: window exceeds available deviations");

    GrowthDiagnostic diag;
    diag.window_lo = window_lo;
    diag.window_hi = window_hi;
    diag.tolerance = tolerance;

    for (unsigned i = window_lo; i <= window_hi; ++i)
        if (eps.eps(i) == 0) {
            diag.verdict = Verdict::Refused; // no growth rate (complete intersection)
            return diag;
        }

    const Int b = Int(profile.multiplicity_b);
    Rat pow_lo = 1, pow_hi = 1;
    for (unsigned i = 1; i < window_lo; ++i) {
        pow_lo *= profile.rho_lo;
        pow_hi *= profile.rho_hi;
    }
    for (unsigned i = window_lo; i <= window_hi; ++i) {
        pow_lo *= profile.rho_lo;
        pow_hi *= profile.rho_hi;
        const Rat num = Rat(Int(i) * eps.eps(i), b);
        diag.ratio_lo.push_back(num / pow_hi);
        diag.ratio_hi.push_back(num / pow_lo);
        diag.deviation.push_back(
            std::max(abs_rat(diag.ratio_lo.back() - 1), abs_rat(diag.ratio_hi.back() - 1)));
    }

    const std::size_t count = diag.deviation.size();
    const std::size_t tail = std::min<std::size_t>(5, count);
    Rat tail_max = 0;
    for (std::size_t k = count - tail; k < count; ++k)
        tail_max = std::max(tail_max, diag.deviation[k]);
    diag.verdict = (diag.deviation.back() <= tolerance && tail_max <= 2 * tolerance)
                       ? Verdict::Pass
                       : Verdict::Fail;

    // Envelope trend: trailing 5-window maxima over the last five indices.
    auto trailing_max = [&](std::size_t k) {
        Rat m = 0;
        const std::size_t from = k >= 4 ? k - 4 : 0;
        for (std::size_t j = from; j <= k; ++j) m = std::max(m, diag.deviation[j]);
        return m;
    };
    diag.envelope_monotone = true;
    diag.pointwise_monotone = true;
    for (std::size_t k = count - tail; k + 1 < count; ++k) {
        if (trailing_max(k + 1) > trailing_max(k)) diag.envelope_monotone = false;
        if (diag.deviation[k + 1] > diag.deviation[k]) diag.pointwise_monotone = false;
    }
    return diag;
}

std::string GrowthDiagnostic::to_text() const {
    std::ostringstream os;
    os << "window [" << window_lo << ", " << window_hi << "], tolerance "
       << to_decimal_string(tolerance) << "\n";
    for (std::size_t k = 0; k < ratio_lo.size(); ++k) {
        const unsigned i = window_lo + static_cast<unsigned>(k);
        os << "  i=" << i << "  ratio=" << to_real((ratio_lo[k] + ratio_hi[k]) / 2)
           << "  |ratio-1|<=" << to_real(deviation[k]).convert_to<double>() << "\n";
    }
    os << "verdict: " << verdict_name(verdict)
       << (envelope_monotone ? " (envelope monotone)" : " (envelope NOT monotone)") << "\n";
    return os.str();
}

nlohmann::json GrowthDiagnostic::to_json() const {
    nlohmann::json ratios = nlohmann::json::array();
    for (std::size_t k = 0; k < ratio_lo.size(); ++k)
        ratios.push_back(nlohmann::json{
            {"i", window_lo + k},
            {"ratio_lo", to_decimal_string(ratio_lo[k])},
            {"ratio_hi", to_decimal_string(ratio_hi[k])},
            {"abs_dev_upper", to_real(deviation[k]).convert_to<double>()}});
    return nlohmann::json{{"window", {window_lo, window_hi}},
                          {"tolerance", to_decimal_string(tolerance)},
                          {"ratios", ratios},
                          {"verdict", verdict_name(verdict)},
                          {"envelope_monotone", envelope_monotone},
                          {"pointwise_monotone", pointwise_monotone}};
}

} // namespace gradedev
