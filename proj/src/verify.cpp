#include "gradedev/verify.hpp"

#include "gradedev/errors.hpp"
#include "gradedev/graph.hpp"
#include "gradedev/hilbert.hpp"
#include "gradedev/lex_segment.hpp"
#include "gradedev/sturm.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace gradedev {

namespace {

constexpr std::size_t kMaxReportedFailures = 16;

const BettiCaps kSweepCaps{6, 64, 100000};

std::vector<std::uint64_t> quotient_betti_tail(const BettiTable& table) {
    auto totals = table.totals();
    if (totals.empty()) return {};
    return {totals.begin() + 1, totals.end()};
}

bool betti_dominated(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint64_t rhs = i < b.size() ? b[i] : 0;
        if (a[i] > rhs) return false;
    }
    return true;
}

Graph graph_from_mask(unsigned n, std::uint64_t mask) {
    Graph g(n);
    unsigned bit = 0;
    for (unsigned u = 1; u <= n; ++u)
        for (unsigned v = u + 1; v <= n; ++v) {
            if (mask & (std::uint64_t{1} << bit)) g.add_edge(u, v);
            ++bit;
        }
    return g;
}

} // namespace

void CheckReport::fail(const std::string& what) {
    if (failures.size() < kMaxReportedFailures) failures.push_back(what);
    else if (failures.size() == kMaxReportedFailures)
        failures.push_back("... further failures suppressed");
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << (passed() ? "PASS" : "FAIL") << "  " << suite << "  (" << checked << " checks";
    if (!passed()) os << ", " << failures.size() << " failures";
    os << ")\n";
    for (const auto& n : notes) os << "  note: " << n << "\n";
    for (const auto& f : failures) os << "  counterexample: " << f << "\n";
    return os.str();
}

nlohmann::json CheckReport::to_json() const {
    return nlohmann::json{{"suite", suite},
                          {"passed", passed()},
                          {"checked", checked},
                          {"failures", failures},
                          {"notes", notes}};
}

std::vector<MonomialIdeal> quadratic_ideal_corpus(unsigned n) {
    const auto quads = monomials_of_degree(n, 2);
    if (quads.size() > 20)
        throw ResourceCap("quadratic corpus: too many generators to enumerate");
    std::vector<MonomialIdeal> out;
    out.reserve(std::size_t{1} << quads.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << quads.size()); ++mask) {
        std::vector<Monomial> gens;
        for (std::size_t b = 0; b < quads.size(); ++b)
            if (mask & (std::uint64_t{1} << b)) gens.push_back(quads[b]);
        out.push_back(
            MonomialIdeal::make(n, std::move(gens), MonomialIdeal::DegreePolicy::Silent));
    }
    return out;
}

std::vector<MonomialIdeal> quadratic_ideal_sample(unsigned n, std::size_t count,
                                                  std::uint64_t seed) {
    const auto quads = monomials_of_degree(n, 2);
    const std::uint64_t total = (std::uint64_t{1} << quads.size()) - 1; // nonzero masks
    std::vector<std::uint64_t> masks(total);
    std::iota(masks.begin(), masks.end(), std::uint64_t{1});
    std::mt19937_64 rng(seed);
    // Fisher-Yates by hand; std::shuffle is not reproducible across libraries.
    for (std::size_t i = masks.size(); i-- > 1;)
        std::swap(masks[i], masks[rng() % (i + 1)]);
    count = std::min<std::size_t>(count, masks.size());
    masks.resize(count);
    std::sort(masks.begin(), masks.end());
    std::vector<MonomialIdeal> out;
    out.reserve(count);
    for (std::uint64_t mask : masks) {
        std::vector<Monomial> gens;
        for (std::size_t b = 0; b < quads.size(); ++b)
            if (mask & (std::uint64_t{1} << b)) gens.push_back(quads[b]);
        out.push_back(
            MonomialIdeal::make(n, std::move(gens), MonomialIdeal::DegreePolicy::Silent));
    }
    return out;
}

PoincareSeries koszul_form(const MonomialIdeal& ideal, std::size_t check_order) {
    if (ideal.max_gen_degree() > 2)
        throw InputError("koszul_form: not a quadratic monomial ideal");
    return poincare_koszul(hilbert_data(ideal), check_order);
}

PoincareSeries golod_form(const MonomialIdeal& ideal, const BettiCaps& caps) {
    if (ideal.is_zero()) return poincare_ci(ideal.vars(), 0);
    return poincare_golod(ideal.vars(), quotient_betti_tail(betti_table(ideal, caps)));
}

CheckReport verify_lex(const std::vector<MonomialIdeal>& corpus, unsigned order) {
    CheckReport report;
    report.suite = "lex dominance";
    for (const auto& I : corpus) {
        ++report.checked;
        const MonomialIdeal L = lex_segment_certified(I).ideal;
        const auto bI = quotient_betti_tail(betti_table(I, kSweepCaps));
        const auto bL = quotient_betti_tail(betti_table(L, kSweepCaps));
        if (!betti_dominated(bI, bL)) {
            report.fail("betti dominance fails for I = " + I.to_string() +
                        " with L = " + L.to_string());
            continue;
        }
        const DeviationSequence epsI = deviations_from_series(koszul_form(I, order), order);
        const PoincareSeries pl =
            L.is_zero() ? poincare_ci(L.vars(), 0) : poincare_golod(L.vars(), bL);
        const DeviationSequence epsL = deviations_from_series(pl, order);
        if (!epsI.dominated_by(epsL))
            report.fail("deviation dominance fails for I = " + I.to_string() +
                        " with L = " + L.to_string());
    }
    return report;
}

CheckReport verify_serre(const std::vector<MonomialIdeal>& corpus, unsigned order) {
    CheckReport report;
    report.suite = "serre bound";
    for (const auto& I : corpus) {
        ++report.checked;
        const TruncatedSeries koszul = koszul_form(I, order).expand(order);
        const TruncatedSeries bound = golod_form(I).expand(order);
        if (!koszul.dominated_by(bound))
            report.fail("Serre bound fails for I = " + I.to_string());
    }
    return report;
}

CheckReport verify_methods(const std::vector<MonomialIdeal>& corpus, unsigned order) {
    CheckReport report;
    report.suite = "method equivalence";
    // (closed form, denominator) pairs to compare on eps_2..eps_order
    auto compare = [&](const PoincareSeries& p, const IntPolynomial& den,
                       const std::string& label) {
        ++report.checked;
        const DeviationSequence a = deviations_from_series(p, order);
        const DeviationSequence b = deviations_mobius(den, 0, order, std::nullopt);
        for (std::size_t i = 2; i <= order; ++i)
            if (a.eps(i) != b.eps(i)) {
                report.fail("extraction routes disagree at eps_" + std::to_string(i) +
                            " for " + label);
                return;
            }
    };
    for (const auto& I : corpus) {
        const PoincareSeries koszul = koszul_form(I, order);
        compare(koszul, koszul.closed_form.den, "koszul form of " + I.to_string());
        if (golod_certificate(I, kSweepCaps).certified() && !I.is_zero()) {
            const PoincareSeries golod = golod_form(I);
            compare(golod, golod.closed_form.den, "golod form of " + I.to_string());
        }
    }
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned c = 0; c <= n; ++c) {
            const PoincareSeries ci = poincare_ci(n, c);
            compare(ci, ci.closed_form.den,
                    "ci form n=" + std::to_string(n) + " c=" + std::to_string(c));
        }
    return report;
}

CheckReport verify_growth(unsigned n, unsigned window_lo, unsigned window_hi,
                          const Rat& tolerance) {
    CheckReport report;
    report.suite = "golod growth";
    for (const auto& I : quadratic_ideal_corpus(n)) {
        if (I.num_gens() < 2 || !is_strongly_stable(I)) continue;
        ++report.checked;
        const PoincareSeries p = golod_form(I);
        GrowthProfile profile;
        try {
            profile = golod_rho(p.closed_form.den);
        } catch (const HypothesisViolated& e) {
            // complete-intersection-like members (beta_2 = 0) are outside the
            // theorem's hypotheses
            --report.checked;
            continue;
        }
        if (!(profile.rho_lo > 1)) {
            report.fail("rho not certified > 1 for I = " + I.to_string());
            continue;
        }
        if (!(p.closed_form.den.evaluate(profile.root_lo) > 0 &&
              p.closed_form.den.evaluate(profile.root_hi) < 0)) {
            report.fail("sign-change certificate violated for I = " + I.to_string());
            continue;
        }
        const DeviationSequence eps = deviations_from_series(p, window_hi);
        const GrowthDiagnostic diag =
            growth_diagnostic(eps, profile, window_lo, window_hi, tolerance);
        if (diag.verdict != Verdict::Pass)
            report.fail("diagnostic " + verdict_name(diag.verdict) + " for I = " +
                        I.to_string());
        else if (!diag.envelope_monotone)
            report.fail("convergence envelope not monotone for I = " + I.to_string());
    }
    return report;
}

CheckReport verify_graph_growth(unsigned n_lo, unsigned n_hi, double root_tol,
                                unsigned window_lo, unsigned window_hi, const Rat& tolerance) {
    CheckReport report;
    report.suite = "cycle/path growth";
    auto run_family = [&](const std::string& kind, const Graph& g, unsigned n,
                          std::vector<ClosedFormRoot> closed) {
        ++report.checked;
        const std::string label = kind + ":" + std::to_string(n);
        const IntPolynomial f = independence_f_polynomial(g);
        // closed-form roots vs exact isolation of f
        if (!all_roots_real(f)) {
            report.fail(label + ": f not real-rooted");
            return;
        }
        const auto brackets = sturm_isolate(f);
        if (brackets.size() + 0 < closed.size()) {
            report.fail(label + ": fewer isolated roots than closed forms");
            return;
        }
        for (std::size_t s = 0; s < closed.size(); ++s) {
            const double value = closed[s].value.convert_to<double>();
            bool matched = false;
            for (const auto& b : brackets) {
                const double lo = to_real(b.lo).convert_to<double>();
                const double hi = to_real(b.hi).convert_to<double>();
                if (value >= lo - root_tol && value <= hi + root_tol) matched = true;
            }
            if (!matched)
                report.fail(label + ": closed-form root " + closed[s].expression +
                            " not matched by isolation");
        }
        // h-route growth
        const HilbertData hd = hilbert_data(edge_ideal(g));
        if (!all_roots_real(hd.h_polynomial)) {
            report.fail(label + ": h not real-rooted");
            return;
        }
        const GrowthProfile profile = koszul_growth(hd.h_polynomial);
        const Real tau = closed.front().value;
        const Real image = -tau / (1 + tau); // radius r = |tau/(1+tau)|
        const double r_lo = to_real(profile.root_lo).convert_to<double>();
        const double r_hi = to_real(profile.root_hi).convert_to<double>();
        if (!(image.convert_to<double>() >= r_lo - root_tol &&
              image.convert_to<double>() <= r_hi + root_tol)) {
            report.fail(label + ": min-modulus bracket misses the closed-form image");
            return;
        }
        const double rho_closed = (1 / image).convert_to<double>();
        const double rho_mid =
            to_real((profile.rho_lo + profile.rho_hi) / 2).convert_to<double>();
        if (std::abs(rho_closed - rho_mid) > root_tol) {
            report.fail(label + ": rho differs from the closed form");
            return;
        }
        const DeviationSequence eps =
            deviations_from_series(koszul_form(edge_ideal(g), window_hi), window_hi);
        const GrowthDiagnostic diag =
            growth_diagnostic(eps, profile, window_lo, window_hi, tolerance);
        if (diag.verdict != Verdict::Pass)
            report.fail(label + ": diagnostic " + verdict_name(diag.verdict));
    };
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        std::vector<ClosedFormRoot> cycle_roots, path_roots;
        for (unsigned s = 1; s <= n / 2; ++s) cycle_roots.push_back(cycle_root(n, s));
        for (unsigned s = 1; s <= (n + 1) / 2; ++s) path_roots.push_back(path_root(n, s));
        run_family("cycle", Graph::cycle(n), n, std::move(cycle_roots));
        run_family("path", Graph::path(n), n, std::move(path_roots));
    }
    return report;
}

CheckReport verify_graph_sweep(unsigned max_vertices) {
    CheckReport report;
    report.suite = "graph sweep";
    std::uint64_t linres_checked = 0;
    for (unsigned n = 1; n <= max_vertices; ++n) {
        const unsigned slots = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            ++report.checked;
            const IntPolynomial f = independence_f_polynomial(g);
            const IntPolynomial via_f = f_to_h(f, static_cast<unsigned>(f.degree()));
            const HilbertData hd = hilbert_data(edge_ideal(g));
            if (via_f != hd.h_polynomial) {
                report.fail("h routes disagree for " + g.to_text());
                continue;
            }
            if (is_claw_free(g) && hd.h_polynomial.degree() >= 1 &&
                !all_roots_real(hd.h_polynomial)) {
                report.fail("claw-free graph with non-real-rooted h: " + g.to_text());
                continue;
            }
            if (complement_is_chordal(g) && !edge_ideal(g).is_zero()) {
                ++linres_checked;
                if (!has_linear_resolution(edge_ideal(g), kSweepCaps))
                    report.fail("chordal complement without linear resolution: " +
                                g.to_text());
            }
        }
    }
    report.notes.push_back("linear-resolution checks: " + std::to_string(linres_checked));
    return report;
}

CheckReport verify_base_deviations(const std::vector<MonomialIdeal>& corpus, unsigned order) {
    CheckReport report;
    report.suite = "base deviations";
    for (const auto& I : corpus) {
        ++report.checked;
        const DeviationSequence eps = deviations_from_series(koszul_form(I, order), order);
        if (eps.eps(1) != Int(I.vars())) {
            report.fail("eps_1 != edim for I = " + I.to_string());
            continue;
        }
        if (eps.eps(2) != Int(I.num_gens())) {
            report.fail("eps_2 != number of generators for I = " + I.to_string());
            continue;
        }
        if (is_complete_intersection(I)) {
            bool all_zero = true;
            for (std::size_t i = 3; i <= order; ++i)
                if (eps.eps(i) != 0) all_zero = false;
            if (!all_zero)
                report.fail("complete intersection with nonzero tail: I = " + I.to_string());
        }
        // Golod-certified members: the Golod route must give the same sequence
        // (rigidity is enforced inside the constructors).
        if (!I.is_zero() && golod_certificate(I, kSweepCaps).certified()) {
            const DeviationSequence golod =
                deviations_from_series(golod_form(I), order);
            for (std::size_t i = 1; i <= order; ++i)
                if (golod.eps(i) != eps.eps(i)) {
                    report.fail("koszul and golod routes disagree for I = " + I.to_string());
                    break;
                }
        }
    }
    return report;
}

} // namespace gradedev
