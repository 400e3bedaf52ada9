#include "gradedev/poincare.hpp"

#include "gradedev/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace gradedev {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Golod: return "golod";
        case Provenance::Koszul: return "koszul";
        case Provenance::CompleteIntersection: return "complete-intersection";
        case Provenance::UserSupplied: return "user-supplied";
    }
    return "unknown";
}

PoincareSeries PoincareSeries::make(RationalFunction f, Provenance provenance,
                                    std::size_t check_order) {
    if (!f.expandable_at_origin())
        throw DenominatorVanishesAtZero("Poincare series: denominator vanishes at z = 0");
    if (f.value_at_zero() != 1)
        throw NotAPoincareSeries("Poincare series: value at z = 0 must be 1");
    const TruncatedSeries s = series_from_rational(f, check_order);
    for (std::size_t i = 0; i <= check_order; ++i) {
        const Rat& c = s.coeff(i);
        if (denominator(c) != 1 || c < 0)
            throw NotAPoincareSeries(
                "Poincare series: coefficient of z^" + std::to_string(i) +
                " is not a nonnegative integer (" + to_decimal_string(c) + ")");
    }
    return PoincareSeries{std::move(f), provenance};
}

TruncatedSeries PoincareSeries::expand(std::size_t order) const {
    return series_from_rational(closed_form, order);
}

PoincareSeries poincare_golod(unsigned edim, const std::vector<std::uint64_t>& betti_totals) {
    const IntPolynomial num = IntPolynomial{Int(1), Int(1)}.pow(edim);
    IntPolynomial den = IntPolynomial::constant(1);
    for (std::size_t i = 0; i < betti_totals.size(); ++i)
        den = den - IntPolynomial::term(Int(betti_totals[i]), i + 2);
    return PoincareSeries::make(RationalFunction(num, den), Provenance::Golod);
}

PoincareSeries poincare_koszul(const HilbertData& hilbert, std::size_t check_order) {
    const IntPolynomial num = IntPolynomial{Int(1), Int(1)}.pow(hilbert.dimension);
    const IntPolynomial den = hilbert.h_polynomial.compose_scale();
    RationalFunction f(num, den);
    const TruncatedSeries s = series_from_rational(f, check_order);
    for (std::size_t i = 0; i <= check_order; ++i)
        if (s.coeff(i) < 0)
            throw OddSignPattern("koszul form: negative coefficient at z^" +
                                 std::to_string(i) + " (input is not Koszul)");
    return PoincareSeries::make(std::move(f), Provenance::Koszul, check_order);
}

PoincareSeries poincare_ci(unsigned edim, unsigned codim) {
    if (codim > edim)
        throw InputError("complete intersection form: codimension exceeds edim");
    const IntPolynomial num = IntPolynomial{Int(1), Int(1)}.pow(edim);
    const IntPolynomial den = IntPolynomial{Int(1), Int(0), Int(-1)}.pow(codim);
    return PoincareSeries::make(RationalFunction(num, den), Provenance::CompleteIntersection);
}

DeviationSequence::DeviationSequence(std::vector<Int> values, std::string provenance,
                                     bool eps1_known)
    : values_(std::move(values)), provenance_(std::move(provenance)), eps1_known_(eps1_known) {
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] < 0)
            throw NegativeDeviation("deviation eps_" + std::to_string(i + 1) +
                                    " is negative");
    // Rigidity: a vanishing deviation at index >= 3 forces all later ones to vanish.
    bool zero_seen = false;
    for (std::size_t i = 3; i <= values_.size(); ++i) {
        const bool zero = values_[i - 1] == 0;
        if (zero_seen && !zero)
            throw RigidityViolation("eps_" + std::to_string(i) +
                                    " nonzero after a vanishing deviation");
        zero_seen = zero_seen || zero;
    }
}

const Int& DeviationSequence::eps(std::size_t i) const {
    if (i == 0 || i > values_.size())
        throw IndexOutOfRange("deviation index out of range");
    return values_[i - 1];
}

bool DeviationSequence::dominated_by(const DeviationSequence& o) const {
    if (order() != o.order())
        throw InputError("deviation dominance: mismatched orders");
    const std::size_t start = (eps1_known_ && o.eps1_known_) ? 0 : 1;
    for (std::size_t i = start; i < values_.size(); ++i)
        if (values_[i] > o.values_[i]) return false;
    return true;
}

std::string DeviationSequence::to_text() const {
    std::ostringstream os;
    os << "  i   eps_i  (" << provenance_ << ")\n";
    for (std::size_t i = 1; i <= order(); ++i) {
        if (i == 1 && !eps1_known_) {
            os << "  1   (not produced by this route)\n";
            continue;
        }
        os << "  " << i << "   " << eps(i).str() << "\n";
    }
    return os.str();
}

nlohmann::json DeviationSequence::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : values_) {
        if (fits_int64(v) && abs(v) < (Int(1) << 53))
            arr.push_back(v.convert_to<std::int64_t>());
        else
            arr.push_back(v.str());
    }
    return nlohmann::json{{"provenance", provenance_},
                          {"eps1_known", eps1_known_},
                          {"eps", arr}};
}

PowerSums power_sums(const IntPolynomial& den, std::size_t order) {
    if (den.coeff(0) != 1)
        throw InputError("power sums: denominator constant term must be 1");
    // den = prod (1 + alpha_j z), so den's coefficients are the elementary
    // symmetric functions of the alpha_j.  Newton:
    //   p_k = sum_{j=1}^{k-1} (-1)^(j-1) e_j p_{k-j} + (-1)^(k-1) k e_k.
    PowerSums ps;
    ps.p.resize(order);
    for (std::size_t k = 1; k <= order; ++k) {
        Int acc = 0;
        for (std::size_t j = 1; j < k; ++j) {
            const Int& e = den.coeff(j);
            if (e == 0) continue;
            Int term = e * ps.p[k - j - 1];
            acc += (j % 2 == 1) ? term : -term;
        }
        const Int& ek = den.coeff(k);
        Int tail = ek * Int(k);
        acc += (k % 2 == 1) ? tail : -tail;
        ps.p[k - 1] = acc;
    }
    return ps;
}

namespace detail {

std::vector<Rat> deviation_rationals_from_series(const RationalFunction& f, std::size_t order) {
    const TruncatedSeries q = series_from_rational(f.compose_scale(), order);
    if (q.coeff(0) != 1)
        throw ConstantTermNotOne("deviation extraction: P(0) must be 1");
    const TruncatedSeries lg = series_log(q);
    std::vector<Rat> eps(order, Rat(0));
    for (std::size_t m = 1; m <= order; ++m) {
        // c_m = m [z^m](-log Q) = sum_{d|m} (-1)^(d+1) d eps_d
        Rat c = -Rat(Int(m)) * lg.coeff(m);
        Rat rest = 0;
        for (std::uint64_t d : divisors(m)) {
            if (d == m) continue;
            Rat term = Rat(Int(d)) * eps[d - 1];
            rest += (d % 2 == 1) ? term : -term;
        }
        Rat val = (c - rest) / Rat(Int(m));
        if (m % 2 == 0) val = -val;
        eps[m - 1] = val;
    }
    return eps;
}

std::vector<Rat> deviation_rationals_mobius(const IntPolynomial& den, std::size_t order) {
    const PowerSums ps = power_sums(den, order);
    std::vector<Rat> eps(order, Rat(0));
    for (std::size_t i = 2; i <= order; ++i) {
        Rat acc = 0;
        for (std::uint64_t d : divisors(i)) {
            const int mu = mobius(i / d);
            if (mu == 0) continue;
            acc += Rat(Int(mu)) * Rat(ps.at(d));
        }
        Rat val = acc / Rat(Int(i));
        if (i % 2 == 1) val = -val;
        eps[i - 1] = val;
    }
    return eps;
}

} // namespace detail

namespace {

std::vector<Int> validate_integral(const std::vector<Rat>& eps, const std::string& route) {
    std::vector<Int> out(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (denominator(eps[i]) != 1)
            throw NonIntegralDeviation(route + ": eps_" + std::to_string(i + 1) +
                                       " = " + to_decimal_string(eps[i]) +
                                       " is not an integer");
        if (eps[i] < 0)
            throw NegativeDeviation(route + ": eps_" + std::to_string(i + 1) +
                                    " = " + to_decimal_string(eps[i]) + " is negative");
        out[i] = numerator(eps[i]);
    }
    return out;
}

} // namespace

DeviationSequence deviations_from_series(const PoincareSeries& p, std::size_t order) {
    auto raw = detail::deviation_rationals_from_series(p.closed_form, order);
    return DeviationSequence(validate_integral(raw, "series extraction"),
                             provenance_name(p.provenance));
}

DeviationSequence deviations_mobius(const IntPolynomial& den, unsigned c, std::size_t order,
                                    std::optional<std::uint64_t> eps1) {
    (void)c; // the numerator exponent cancels under Mobius summation for i >= 2
    auto raw = detail::deviation_rationals_mobius(den, order);
    if (eps1) raw[0] = Rat(Int(*eps1));
    return DeviationSequence(validate_integral(raw, "mobius extraction"),
                             "mobius", eps1.has_value());
}

TruncatedSeries betti_k_from_deviations(const DeviationSequence& eps, std::size_t order) {
    TruncatedSeries result = TruncatedSeries::one(order);
    for (std::size_t i = 1; i <= std::min(eps.order(), order); ++i) {
        const Int& e = eps.eps(i);
        if (e == 0) continue;
        std::vector<Rat> factor(order + 1, Rat(0));
        factor[0] = 1;
        if (i % 2 == 1) {
            // (1 + z^i)^e
            for (std::size_t k = 1; k * i <= order; ++k)
                factor[k * i] = Rat(binomial(e, k));
        } else {
            // (1 - z^i)^(-e): nonnegative binomial expansion
            for (std::size_t k = 1; k * i <= order; ++k)
                factor[k * i] = Rat(binomial(e + Int(k) - 1, k));
        }
        result = result * TruncatedSeries(order, std::move(factor));
    }
    return result;
}

bool dominance(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.dominated_by(b);
}

bool dominance(const DeviationSequence& a, const DeviationSequence& b) {
    return a.dominated_by(b);
}

} // namespace gradedev
