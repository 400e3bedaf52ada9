#include "gradedev/series.hpp"

#include "gradedev/errors.hpp"

#include <nlohmann/json.hpp>

namespace gradedev {

TruncatedSeries::TruncatedSeries(std::size_t order)
    : order_(order), coeffs_(order + 1, Rat(0)) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rat> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order_ + 1)
        throw InputError("truncated series: coefficient count must be order + 1");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

const Rat& TruncatedSeries::coeff(std::size_t i) const {
    static const Rat zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

void TruncatedSeries::check_same_order(const TruncatedSeries& o) const {
    if (order_ != o.order_)
        throw InputError("truncated series: mismatched truncation orders");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_same_order(o);
    TruncatedSeries r(order_);
    for (std::size_t i = 0; i <= order_; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    check_same_order(o);
    TruncatedSeries r(order_);
    for (std::size_t i = 0; i <= order_; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_same_order(o);
    TruncatedSeries r(order_);
    for (std::size_t i = 0; i <= order_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order_; ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t lower_order) const {
    if (lower_order > order_)
        throw InputError("truncated series: cannot extend by truncation");
    return TruncatedSeries(lower_order,
                           std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + lower_order + 1));
}

bool TruncatedSeries::dominated_by(const TruncatedSeries& o) const {
    check_same_order(o);
    for (std::size_t i = 0; i <= order_; ++i)
        if (coeffs_[i] > o.coeffs_[i]) return false;
    return true;
}

nlohmann::json TruncatedSeries::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_)
        arr.push_back(nlohmann::json{{"num", numerator(c).str()},
                                     {"den", denominator(c).str()}});
    return nlohmann::json{{"order", order_}, {"coeffs", arr}};
}

TruncatedSeries series_from_rational(const RationalFunction& f, std::size_t order) {
    if (f.den.coeff(0) == 0)
        throw DenominatorVanishesAtZero("series expansion: denominator vanishes at z = 0");
    const Rat d0 = Rat(f.den.coeff(0));
    TruncatedSeries s(order);
    std::vector<Rat> c(order + 1, Rat(0));
    for (std::size_t k = 0; k <= order; ++k) {
        Rat acc = Rat(f.num.coeff(k));
        const std::size_t jmax = std::min<std::size_t>(k, static_cast<std::size_t>(
                                                              std::max(0, f.den.degree())));
        for (std::size_t j = 1; j <= jmax; ++j)
            acc -= Rat(f.den.coeff(j)) * c[k - j];
        c[k] = acc / d0;
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries series_from_polynomial(const IntPolynomial& p, std::size_t order) {
    std::vector<Rat> c(order + 1, Rat(0));
    for (std::size_t i = 0; i <= order && static_cast<int>(i) <= p.degree(); ++i)
        c[i] = Rat(p.coeff(i));
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries series_log(const TruncatedSeries& s) {
    if (s.coeff(0) != 1)
        throw ConstantTermNotOne("series log: constant term must be 1");
    const std::size_t n = s.order();
    std::vector<Rat> l(n + 1, Rat(0));
    // (log s)' = s'/s, solved term by term: m*l_m = m*s_m - sum s_j (m-j) l_{m-j}.
    for (std::size_t m = 1; m <= n; ++m) {
        Rat acc = Rat(Int(m)) * s.coeff(m);
        for (std::size_t j = 1; j < m; ++j)
            acc -= s.coeff(j) * Rat(Int(m - j)) * l[m - j];
        l[m] = acc / Rat(Int(m));
    }
    return TruncatedSeries(n, std::move(l));
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (s.coeff(0) != 0)
        throw InputError("series exp: constant term must be 0");
    const std::size_t n = s.order();
    std::vector<Rat> e(n + 1, Rat(0));
    e[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rat acc = 0;
        for (std::size_t j = 1; j <= m; ++j)
            acc += Rat(Int(j)) * s.coeff(j) * e[m - j];
        e[m] = acc / Rat(Int(m));
    }
    return TruncatedSeries(n, std::move(e));
}

} // namespace gradedev
