#pragma once

#include "gradedev/betti.hpp"
#include "gradedev/growth.hpp"
#include "gradedev/poincare.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gradedev {

/// Outcome of one verification sweep: zero failures = pass; the first few
/// failures are serialized for diagnosis.
struct CheckReport {
    std::string suite;
    std::uint64_t checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    void fail(const std::string& what);
    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// All monomial ideals generated by degree-2 monomials in n variables
/// (including the zero ideal).
std::vector<MonomialIdeal> quadratic_ideal_corpus(unsigned n);

/// Deterministic sample of distinct nonzero quadratic ideals in n variables.
std::vector<MonomialIdeal> quadratic_ideal_sample(unsigned n, std::size_t count,
                                                  std::uint64_t seed);

/// Koszul closed form of a quadratic monomial quotient (Froberg).
PoincareSeries koszul_form(const MonomialIdeal& ideal, std::size_t check_order = 32);

/// Golod closed form driven by the computed Betti numbers of S/I.
PoincareSeries golod_form(const MonomialIdeal& ideal, const BettiCaps& caps = BettiCaps{6, 64, 100000});

/// Lex / BHP dominance: for every corpus ideal I with lex segment L,
/// eps_i(S/I) <= eps_i(S/L) for i <= order and beta_i(S/I) <= beta_i(S/L)
/// for all i.
CheckReport verify_lex(const std::vector<MonomialIdeal>& corpus, unsigned order = 12);

/// Serre bound: expansion of the Koszul form of each quadratic corpus ideal
/// is dominated by the Golod form with the same edim and Betti numbers.
CheckReport verify_serre(const std::vector<MonomialIdeal>& corpus, unsigned order = 32);

/// Method equivalence: series extraction vs Mobius/Newton on every closed
/// form attached to the corpus (Koszul always, Golod when certified, plus
/// complete-intersection forms).
CheckReport verify_methods(const std::vector<MonomialIdeal>& corpus, unsigned order = 40);

/// Golod growth over the strongly stable non-principal quadratic ideals in
/// n variables: rho > 1 with an exact sign-change bracket and a passing
/// convergence diagnostic.
CheckReport verify_growth(unsigned n = 3, unsigned window_lo = 40, unsigned window_hi = 60,
                          const Rat& tolerance = Rat(1, 10));

/// Cycle/path rings: closed-form roots against exact isolation (within
/// root_tol), all-real certification, and a passing diagnostic.
CheckReport verify_graph_growth(unsigned n_lo = 3, unsigned n_hi = 12,
                                double root_tol = 1e-9, unsigned window_lo = 30,
                                unsigned window_hi = 40, const Rat& tolerance = Rat(1, 100));

/// Exhaustive sweep over all graphs on <= max_vertices vertices:
/// the f-route and K-route h-polynomials agree exactly, claw-free graphs
/// have real-rooted h, and chordal complements force linear resolutions.
CheckReport verify_graph_sweep(unsigned max_vertices = 6);

/// Base deviations over a quadratic corpus: eps_1 = n, eps_2 = number of
/// minimal generators, rigidity, and eps_{>=3} = 0 exactly on complete
/// intersections.
CheckReport verify_base_deviations(const std::vector<MonomialIdeal>& corpus,
                                   unsigned order = 12);

} // namespace gradedev
