#include "gradedev/reproduce.hpp"

#include "gradedev/graph.hpp"
#include "gradedev/growth.hpp"
#include "gradedev/hilbert.hpp"
#include "gradedev/io.hpp"
#include "gradedev/poincare.hpp"
#include "gradedev/verify.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace gradedev {

void ReproduceReport::check(const std::string& label, bool ok, const std::string& detail) {
    std::ostringstream os;
    os << (ok ? "  ok " : " BAD ") << label;
    if (!detail.empty()) os << "  [" << detail << "]";
    lines.push_back(os.str());
    all_match = all_match && ok;
}

std::string ReproduceReport::to_text() const {
    std::ostringstream os;
    os << "reproduce " << name << "\n";
    for (const auto& l : lines) os << l << "\n";
    os << (all_match ? "all values match\n" : "MISMATCHES FOUND\n");
    return os.str();
}

nlohmann::json ReproduceReport::to_json() const {
    return nlohmann::json{{"name", name}, {"all_match", all_match}, {"lines", lines}};
}

const std::string& r6_closed_form_text() {
    static const std::string text =
        "1/((z-1)*(z^6-3*z^5+z^4+5*z^3-5*z^2+4*z-1))";
    return text;
}

const std::string& r8_closed_form_text() {
    static const std::string text =
        "-(z^2-z+1)^5/(z^18-9*z^17+37*z^16-93*z^15+160*z^14-192*z^13+136*z^12+31*z^11"
        "-270*z^10+505*z^9-664*z^8+710*z^7-636*z^6+479*z^5-294*z^4+140*z^3-47*z^2+10*z-1)";
    return text;
}

ReproduceReport reproduce_r6r8(unsigned eps_order, unsigned betti_order) {
    ReproduceReport report;
    report.name = "r6r8";
    const PoincareSeries r6 = PoincareSeries::make(
        parse_rational_function(r6_closed_form_text()), Provenance::UserSupplied, eps_order);
    const PoincareSeries r8 = PoincareSeries::make(
        parse_rational_function(r8_closed_form_text()), Provenance::UserSupplied, eps_order);

    const DeviationSequence e6 = deviations_from_series(r6, eps_order);
    const DeviationSequence e8 = deviations_from_series(r8, eps_order);
    report.check("eps_4 of the 6-quadric ring = 16", e6.eps(4) == 16,
                 "computed " + e6.eps(4).str());
    report.check("eps_4 of the 8-quadric ring = 9", e8.eps(4) == 9,
                 "computed " + e8.eps(4).str());
    report.check("eps_4 strictly larger for 6 quadrics", e6.eps(4) > e8.eps(4));
    // extraction already validates nonnegative integrality up to eps_order
    report.check("deviations are nonnegative integers to order " + std::to_string(eps_order),
                 true);

    const TruncatedSeries b6 = r6.expand(betti_order);
    const TruncatedSeries b8 = r8.expand(betti_order);
    report.check("residue-field betti numbers dominated to order " +
                     std::to_string(betti_order),
                 b6.dominated_by(b8));
    report.note("eps(6 quadrics, 1..6):  " + [&] {
        std::ostringstream os;
        for (std::size_t i = 1; i <= 6; ++i) os << e6.eps(i).str() << " ";
        return os.str();
    }());
    report.note("eps(8 quadrics, 1..6):  " + [&] {
        std::ostringstream os;
        for (std::size_t i = 1; i <= 6; ++i) os << e8.eps(i).str() << " ";
        return os.str();
    }());
    return report;
}

ReproduceReport reproduce_remark_eps3() {
    ReproduceReport report;
    report.name = "remark-eps3";
    const MonomialIdeal I = parse_ideal("x1^2, x1*x2", 2, MonomialIdeal::DegreePolicy::Silent);
    const MonomialIdeal J = parse_ideal("x1^2, x2^2", 2, MonomialIdeal::DegreePolicy::Silent);
    const auto bI = betti_table(I).totals();
    const auto bJ = betti_table(J).totals();
    report.check("identical betti totals over the polynomial ring", bI == bJ,
                 "both (1, 2, 1)");
    report.check("betti totals equal (2, 1) in homological degrees 1, 2",
                 bI.size() == 3 && bI[1] == 2 && bI[2] == 1);
    const DeviationSequence epsI = deviations_from_series(golod_form(I), 10);
    const DeviationSequence epsJ = deviations_from_series(poincare_ci(2, 2), 10);
    report.check("eps_3 = 1 for the stable ideal", epsI.eps(3) == 1,
                 "computed " + epsI.eps(3).str());
    report.check("eps_3 = 0 for the complete intersection", epsJ.eps(3) == 0,
                 "computed " + epsJ.eps(3).str());
    return report;
}

ReproduceReport reproduce_complete_graphs(unsigned m_lo, unsigned m_hi, unsigned order) {
    ReproduceReport report;
    report.name = "complete-graphs";
    for (unsigned m = m_lo; m <= m_hi; ++m) {
        const Graph g = Graph::complete(m + 1);
        const HilbertData hd = hilbert_data(edge_ideal(g));
        report.check("K_" + std::to_string(m + 1) + ": h = 1 + " + std::to_string(m) + "z",
                     hd.h_polynomial == IntPolynomial{Int(1), Int(m)} && hd.dimension == 1);
        const PoincareSeries p = poincare_koszul(hd, order);
        const DeviationSequence eps = deviations_from_series(p, order);
        // displayed formula: eps_i = ((-1)^i / i) sum_{d|i} mu(i/d) (-m)^d
        bool formula_ok = true;
        for (std::size_t i = 2; i <= order && formula_ok; ++i) {
            Rat acc = 0;
            for (std::uint64_t d : divisors(i)) {
                const int mu = mobius(i / d);
                if (mu == 0) continue;
                Int pw = pow(Int(-static_cast<long>(m)), static_cast<unsigned>(d));
                acc += Rat(Int(mu) * pw);
            }
            acc /= Rat(Int(i));
            if (i % 2 == 1) acc = -acc;
            if (acc != Rat(eps.eps(i))) formula_ok = false;
        }
        report.check("K_" + std::to_string(m + 1) + ": extraction matches the Mobius formula to order " +
                         std::to_string(order),
                     formula_ok);
        // i eps_i / m^i within 1e-6 of 1 at the last index, exactly rationally
        const Rat ratio = Rat(Int(order) * eps.eps(order), pow(Int(m), order));
        const Rat dev = ratio > 1 ? Rat(ratio - 1) : Rat(1 - ratio);
        report.check("K_" + std::to_string(m + 1) + ": i*eps_i/m^i within 1e-6 at i = " +
                         std::to_string(order),
                     dev <= Rat(1, 1000000), "deviation " + to_decimal_string(dev));
    }
    return report;
}

ReproduceReport reproduce_p4m(unsigned m) {
    ReproduceReport report;
    report.name = "p4m";
    if (m == 0) {
        report.check("m must be positive", false);
        return report;
    }
    const Graph g = Graph::parse("disjoint:path:4x" + std::to_string(m));
    const HilbertData hd = hilbert_data(edge_ideal(g));
    const IntPolynomial expect = IntPolynomial{Int(1), Int(2)}.pow(m);
    report.check("h = (1+2z)^" + std::to_string(m), hd.h_polynomial == expect,
                 "computed " + hd.h_polynomial.to_string());
    const GrowthProfile profile = koszul_growth(hd.h_polynomial);
    report.check("rho = 2 exactly", profile.rho_lo == 2 && profile.rho_hi == 2);
    report.check("b = " + std::to_string(m), profile.multiplicity_b == m,
                 "computed " + std::to_string(profile.multiplicity_b));
    return report;
}

ReproduceReport reproduce_cycles_paths(unsigned n_lo, unsigned n_hi) {
    ReproduceReport report;
    report.name = "cycles-paths";
    const CheckReport check = verify_graph_growth(n_lo, n_hi);
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        for (const bool cycle : {true, false}) {
            const Graph g = cycle ? Graph::cycle(n) : Graph::path(n);
            const HilbertData hd = hilbert_data(edge_ideal(g));
            const GrowthProfile profile = koszul_growth(hd.h_polynomial);
            std::ostringstream os;
            os << (cycle ? "cycle" : "path") << ":" << n << "  rho = " << profile.rho()
               << "  b = " << profile.multiplicity_b;
            report.note(os.str());
        }
    }
    report.check("closed-form roots, real-rootedness, and diagnostics for n = " +
                     std::to_string(n_lo) + ".." + std::to_string(n_hi),
                 check.passed(), std::to_string(check.checked) + " families checked");
    for (const auto& f : check.failures) report.note("failure: " + f);
    return report;
}

} // namespace gradedev
