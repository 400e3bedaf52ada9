#pragma once

#include "gradedev/numeric.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace gradedev {

/// Side-by-side report of claimed versus computed values.
struct ReproduceReport {
    std::string name;
    std::vector<std::string> lines;
    bool all_match = true;

    void check(const std::string& label, bool ok, const std::string& detail = "");
    void note(const std::string& line) { lines.push_back("       " + line); }
    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// Quotients of a 5-variable polynomial ring by 6 and 8 generic quadrics,
/// from their bundled closed-form Poincare series: eps_4 = 16 vs 9, and the
/// residue-field Betti numbers of the first dominate coefficientwise.
ReproduceReport reproduce_r6r8(unsigned eps_order = 40, unsigned betti_order = 50);

/// (x^2, xy) vs (x^2, y^2): identical Betti numbers over the polynomial
/// ring, different third deviations (1 vs 0).
ReproduceReport reproduce_remark_eps3();

/// Complete graphs K_{m+1} for m in [m_lo, m_hi]: the extracted deviations
/// match the Mobius formula exactly and i*eps_i/m^i converges to 1.
ReproduceReport reproduce_complete_graphs(unsigned m_lo = 2, unsigned m_hi = 5,
                                          unsigned order = 40);

/// m disjoint paths on 4 vertices: h = (1+2z)^m, growth rate 2 with
/// multiplicity m.
ReproduceReport reproduce_p4m(unsigned m);

/// Cycles and paths on n_lo..n_hi vertices: closed-form roots, growth rates,
/// and convergence diagnostics.
ReproduceReport reproduce_cycles_paths(unsigned n_lo = 3, unsigned n_hi = 12);

/// Bundled closed forms (printed rational functions) used by reproduce_r6r8.
const std::string& r6_closed_form_text();
const std::string& r8_closed_form_text();

} // namespace gradedev
