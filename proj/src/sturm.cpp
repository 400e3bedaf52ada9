#include "gradedev/sturm.hpp"

#include "gradedev/errors.hpp"

#include <algorithm>

namespace gradedev {

namespace {

// Divide by the (positive) content only, keeping the sign: Sturm chains are
// sign-sensitive, so leading-coefficient normalization is not allowed here.
IntPolynomial scale_primitive_signed(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    Int c = p.content();
    std::vector<Int> out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeffs()[i] / c;
    return IntPolynomial(std::move(out));
}

// Remainder of a modulo b over Q, rescaled by a positive rational to integer
// coefficients.
IntPolynomial poly_rem_signed(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const Rat lead = Rat(b.leading());
    while (rem.size() > db) {
        const Rat q = rem.back() / lead;
        if (q != 0)
            for (std::size_t j = 0; j <= db; ++j)
                rem[rem.size() - 1 - db + j] -= q * Rat(b.coeff(j));
        rem.pop_back();
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    Int den = 1;
    for (const auto& r : rem) den = lcm(den, denominator(r));
    std::vector<Int> out(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i)
        out[i] = numerator(rem[i]) * (den / denominator(rem[i]));
    return scale_primitive_signed(IntPolynomial(std::move(out)));
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& f) {
    std::vector<IntPolynomial> chain{f, f.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        IntPolynomial r = -poly_rem_signed(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

unsigned sign_variations(const std::vector<IntPolynomial>& chain, const Rat& x) {
    unsigned variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sign_of(p.evaluate(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

Rat cauchy_bound(const IntPolynomial& p) {
    Rat best = 0;
    const Rat lead = Rat(abs(p.leading()));
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = Rat(abs(p.coeff(static_cast<std::size_t>(i)))) / lead;
        best = std::max(best, v);
    }
    return best + 1;
}

struct Isolator {
    IntPolynomial g; // squarefree working polynomial
    std::vector<IntPolynomial> chain;
    std::vector<std::pair<Rat, Rat>> open_brackets; // g(lo), g(hi) != 0, exactly one root
    std::vector<Rat> exact_roots;

    void isolate() {
        for (;;) {
            if (g.degree() < 1) return;
            chain = sturm_chain(g);
            const Rat bound = cauchy_bound(g);
            open_brackets.clear();
            if (split(-bound, bound, sign_variations(chain, -bound) - sign_variations(chain, bound)))
                return; // finished without hitting a rational root
            // A midpoint was a root: it has been recorded and deflated; redo.
        }
    }

private:
    // Returns false if a rational root was hit (g was deflated; restart).
    bool split(const Rat& lo, const Rat& hi, unsigned count) {
        if (count == 0) return true;
        if (count == 1) {
            open_brackets.emplace_back(lo, hi);
            return true;
        }
        const Rat mid = (lo + hi) / 2;
        if (g.evaluate(mid) == 0) {
            record_exact(mid);
            return false;
        }
        const unsigned left = sign_variations(chain, lo) - sign_variations(chain, mid);
        if (!split(lo, mid, left)) return false;
        return split(mid, hi, count - left);
    }

    void record_exact(const Rat& root) {
        exact_roots.push_back(root);
        // (q z - p) divides g exactly (primitive linear factor).
        const IntPolynomial linear{-numerator(root), denominator(root)};
        g = g.divexact(linear);
    }
};

// One bisection step; turns the bracket exact when the midpoint is a root.
void refine_step(const IntPolynomial& g, Rat& lo, Rat& hi) {
    const Rat mid = (lo + hi) / 2;
    const Rat vm = g.evaluate(mid);
    if (vm == 0) {
        lo = hi = mid;
        return;
    }
    if (sign_of(g.evaluate(lo)) * sign_of(vm) < 0)
        hi = mid;
    else
        lo = mid;
}

} // namespace

std::pair<Rat, Rat> RootBracket::modulus_interval() const {
    if (hi <= 0) return {-hi, -lo};
    if (lo >= 0) return {lo, hi};
    // straddles zero; cannot happen for the polynomials isolated here
    // (constant term nonzero), but keep it safe
    return {Rat(0), std::max(Rat(-lo), hi)};
}

std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw InputError("squarefree decomposition: zero polynomial");
    std::vector<std::pair<IntPolynomial, unsigned>> factors;
    IntPolynomial f = p.primitive_part();
    if (f.degree() < 1) return factors;
    // Yun's algorithm.
    IntPolynomial d = f.derivative();
    IntPolynomial a = poly_gcd(f, d);
    IntPolynomial b = f.divexact(a);
    IntPolynomial c = d.divexact(a);
    unsigned multiplicity = 1;
    for (;;) {
        IntPolynomial w = c - b.derivative();
        if (w.is_zero()) {
            if (b.degree() >= 1) factors.emplace_back(b.primitive_part(), multiplicity);
            break;
        }
        IntPolynomial g = poly_gcd(b, w);
        if (g.degree() >= 1) factors.emplace_back(g.primitive_part(), multiplicity);
        b = b.divexact(g);
        c = w.divexact(g);
        ++multiplicity;
        if (b.degree() < 1) break;
    }
    return factors;
}

std::vector<RootBracket> sturm_isolate(const IntPolynomial& p, const Rat& width) {
    if (p.is_zero()) throw InputError("sturm_isolate: zero polynomial");
    std::vector<RootBracket> all;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        Isolator iso;
        iso.g = factor;
        iso.isolate();
        for (const auto& r : iso.exact_roots)
            all.push_back(RootBracket{p, factor, r, r, multiplicity});
        for (auto [lo, hi] : iso.open_brackets) {
            while (hi - lo > width && lo != hi) refine_step(iso.g, lo, hi);
            all.push_back(RootBracket{p, iso.g, lo, hi, multiplicity});
        }
    }
    std::sort(all.begin(), all.end(),
              [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
    // Enforce strict separation between consecutive brackets (roots are
    // distinct across and within factors, so this terminates).
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            RootBracket& a = all[i];
            RootBracket& b = all[i + 1];
            if (a.hi < b.lo) continue;
            if (!a.exact()) refine_step(a.factor, a.lo, a.hi);
            if (!b.exact()) refine_step(b.factor, b.lo, b.hi);
            again = true;
        }
        std::sort(all.begin(), all.end(),
                  [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
    }
    return all;
}

unsigned distinct_real_root_count(const IntPolynomial& p) {
    unsigned count = 0;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        (void)multiplicity;
        const auto chain = sturm_chain(factor);
        const Rat bound = cauchy_bound(factor);
        count += sign_variations(chain, -bound) - sign_variations(chain, bound);
    }
    return count;
}

bool all_roots_real(const IntPolynomial& p) {
    if (p.is_zero()) throw InputError("all_roots_real: zero polynomial");
    if (p.degree() < 1) return true;
    unsigned weighted = 0;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        const auto chain = sturm_chain(factor);
        const Rat bound = cauchy_bound(factor);
        weighted += multiplicity *
                    (sign_variations(chain, -bound) - sign_variations(chain, bound));
    }
    return weighted == static_cast<unsigned>(p.degree());
}

unsigned count_roots_between(const IntPolynomial& squarefree, const Rat& lo, const Rat& hi) {
    if (squarefree.evaluate(lo) == 0 || squarefree.evaluate(hi) == 0)
        throw InputError("count_roots_between: endpoint is a root");
    const auto chain = sturm_chain(squarefree);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

} // namespace gradedev
