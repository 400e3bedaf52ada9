#include "gradedev/hilbert.hpp"

#include "gradedev/errors.hpp"
#include "gradedev/series.hpp"

#include <algorithm>
#include <map>

namespace gradedev {

namespace {

using GenList = std::vector<Monomial>; // minimal, sorted lex-descending

bool pairwise_disjoint_supports(const GenList& gens) {
    std::uint64_t seen = 0;
    for (const auto& g : gens) {
        const std::uint64_t s = g.support();
        if (seen & s) return false;
        seen |= s;
    }
    return true;
}

std::vector<unsigned> key_of(const GenList& gens) {
    std::vector<unsigned> key;
    key.reserve(gens.size() * (gens.empty() ? 0 : gens.front().exponents.size()));
    for (const auto& g : gens)
        key.insert(key.end(), g.exponents.begin(), g.exponents.end());
    return key;
}

GenList minimal_gens(GenList gens) {
    std::sort(gens.begin(), gens.end(), lex_greater);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    GenList minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) minimal.push_back(gens[i]);
    }
    return minimal;
}

struct KPolyContext {
    std::map<std::vector<unsigned>, IntPolynomial> memo;

    IntPolynomial run(const GenList& gens) {
        if (gens.empty()) return IntPolynomial::constant(1);
        if (gens.size() == 1) {
            if (gens.front().is_one()) return {};
            return IntPolynomial::constant(1) -
                   IntPolynomial::term(1, gens.front().degree());
        }
        for (const auto& g : gens)
            if (g.is_one()) return {};
        if (pairwise_disjoint_supports(gens)) {
            IntPolynomial p = IntPolynomial::constant(1);
            for (const auto& g : gens)
                p = p * (IntPolynomial::constant(1) - IntPolynomial::term(1, g.degree()));
            return p;
        }
        auto key = key_of(gens);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        // Pivot: generator of highest degree, ties broken lex-largest.
        std::size_t pivot = 0;
        for (std::size_t i = 1; i < gens.size(); ++i)
            if (gens[i].degree() > gens[pivot].degree()) pivot = i;
        // gens are sorted lex-descending, so the first max-degree hit is lex-largest.
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].degree() == gens[pivot].degree()) { pivot = i; break; }

        const Monomial m = gens[pivot];
        GenList rest;
        rest.reserve(gens.size() - 1);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != pivot) rest.push_back(gens[i]);

        GenList colon;
        colon.reserve(rest.size());
        for (const auto& g : rest) colon.push_back(Monomial::colon(g, m));
        colon = minimal_gens(std::move(colon));

        IntPolynomial result =
            run(rest) - IntPolynomial::term(1, m.degree()) * run(colon);
        memo.emplace(std::move(key), result);
        return result;
    }
};

} // namespace

IntPolynomial k_polynomial(const MonomialIdeal& ideal) {
    KPolyContext ctx;
    return ctx.run(ideal.gens());
}

HilbertData hilbert_data(const MonomialIdeal& ideal) {
    HilbertData data;
    data.k_polynomial = k_polynomial(ideal);
    const unsigned order = data.k_polynomial.vanishing_order_at_one();
    data.dimension = ideal.vars() - order;
    const IntPolynomial one_minus_z{Int(1), Int(-1)};
    IntPolynomial h = data.k_polynomial;
    for (unsigned i = 0; i < order; ++i) h = h.divexact(one_minus_z);
    data.h_polynomial = std::move(h);
    return data;
}

RationalFunction hilbert_series(const MonomialIdeal& ideal) {
    const IntPolynomial one_minus_z{Int(1), Int(-1)};
    return RationalFunction(k_polynomial(ideal), one_minus_z.pow(ideal.vars()));
}

std::uint64_t hilbert_function(const MonomialIdeal& ideal, unsigned degree) {
    std::uint64_t count = 0;
    for (const auto& m : monomials_of_degree(ideal.vars(), degree))
        if (!ideal.contains(m)) ++count;
    return count;
}

std::vector<Int> hilbert_function_values(const MonomialIdeal& ideal, unsigned max_degree) {
    TruncatedSeries s = series_from_rational(hilbert_series(ideal), max_degree);
    std::vector<Int> out(max_degree + 1);
    for (unsigned d = 0; d <= max_degree; ++d) {
        const Rat& c = s.coeff(d);
        if (denominator(c) != 1)
            throw Error("Hilbert function expansion produced a non-integer");
        out[d] = numerator(c);
    }
    return out;
}

} // namespace gradedev
