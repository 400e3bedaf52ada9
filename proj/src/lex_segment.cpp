#include "gradedev/lex_segment.hpp"

#include "gradedev/errors.hpp"

#include <algorithm>
#include <set>

namespace gradedev {

unsigned default_lex_bound(const MonomialIdeal& ideal) {
    const unsigned maxdeg = std::max(2u, ideal.max_gen_degree());
    return std::max(2 * maxdeg, ideal.vars() + maxdeg);
}

LexSegmentResult lex_segment(const MonomialIdeal& ideal, std::optional<unsigned> max_degree) {
    const unsigned n = ideal.vars();
    const unsigned bound = max_degree.value_or(default_lex_bound(ideal));
    if (bound < ideal.max_gen_degree())
        throw InputError("lex_segment: bound below the maximal generator degree");

    const std::vector<Int> hf = hilbert_function_values(ideal, bound);

    std::vector<Monomial> gens;
    std::set<std::vector<unsigned>> prev_segment; // L_{d-1}
    bool near_bound = false;

    for (unsigned d = 1; d <= bound; ++d) {
        const std::vector<Monomial> all = monomials_of_degree(n, d);
        const Int ideal_dim = Int(all.size()) - hf[d];
        if (ideal_dim < 0 || ideal_dim > Int(all.size()))
            throw MacaulayViolation("lex_segment: impossible Hilbert function value");
        const std::size_t take = ideal_dim.convert_to<std::size_t>();

        // n * L_{d-1}
        std::set<std::vector<unsigned>> grown;
        for (const auto& e : prev_segment) {
            Monomial m{e};
            for (unsigned v = 1; v <= n; ++v)
                grown.insert(m.times_variable(v).exponents);
        }

        std::set<std::vector<unsigned>> segment;
        for (std::size_t i = 0; i < take; ++i)
            segment.insert(all[i].exponents);

        for (const auto& e : grown)
            if (!segment.count(e))
                throw MacaulayViolation("lex_segment: n*L_" + std::to_string(d - 1) +
                                        " not contained in L_" + std::to_string(d));

        for (std::size_t i = 0; i < take; ++i)
            if (!grown.count(all[i].exponents)) {
                gens.push_back(all[i]);
                if (d + 1 >= bound) near_bound = true;
            }

        prev_segment = std::move(segment);
    }

    LexSegmentResult result{
        MonomialIdeal::make(n, std::move(gens), MonomialIdeal::DegreePolicy::Silent),
        bound, false, near_bound};

    // Exact completeness certificate: same K-polynomial means same Hilbert
    // series everywhere, and the construction already matches degreewise up
    // to the bound, so no generator can be missing.
    result.complete = (k_polynomial(result.ideal) == k_polynomial(ideal));
    if (!result.complete) {
        // Distinguish "bound too small" (flagged, caller may retry) from a
        // genuine degreewise mismatch below the bound (input bug).
        const std::vector<Int> got = hilbert_function_values(result.ideal, bound);
        for (unsigned d = 0; d <= bound; ++d)
            if (got[d] != hf[d])
                throw MacaulayViolation(
                    "lex_segment: constructed ideal fails the Hilbert function at degree " +
                    std::to_string(d));
    }
    return result;
}

LexSegmentResult lex_segment_certified(const MonomialIdeal& ideal) {
    unsigned bound = default_lex_bound(ideal);
    for (int attempt = 0; attempt < 6; ++attempt) {
        LexSegmentResult r = lex_segment(ideal, bound);
        if (r.complete) return r;
        bound *= 2;
    }
    throw MacaulayViolation("lex_segment: no certified bound found (input bug?)");
}

bool is_stable(const MonomialIdeal& ideal) {
    for (const auto& u : ideal.gens()) {
        const unsigned j = u.max_index();
        for (unsigned i = 1; i < j; ++i)
            if (!ideal.contains(u.exchange(i, j))) return false;
    }
    return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
    for (const auto& u : ideal.gens())
        for (unsigned j = 2; j <= ideal.vars(); ++j) {
            if (u.exponents[j - 1] == 0) continue;
            for (unsigned i = 1; i < j; ++i)
                if (!ideal.contains(u.exchange(i, j))) return false;
        }
    return true;
}

bool is_lex(const MonomialIdeal& ideal) {
    for (unsigned d = 1; d <= ideal.max_gen_degree(); ++d) {
        bool gap_seen = false;
        for (const auto& m : monomials_of_degree(ideal.vars(), d)) {
            const bool inside = ideal.contains(m);
            if (inside && gap_seen) return false;
            if (!inside) gap_seen = true;
        }
    }
    return true;
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
    std::uint64_t seen = 0;
    for (const auto& g : ideal.gens()) {
        const std::uint64_t s = g.support();
        if (seen & s) return false;
        seen |= s;
    }
    return true;
}

} // namespace gradedev
