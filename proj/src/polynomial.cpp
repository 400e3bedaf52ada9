#include "gradedev/polynomial.hpp"

#include "gradedev/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace gradedev {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) {
    trim();
}

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::term(Int c, std::size_t deg) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(deg + 1, Int(0));
        p.coeffs_[deg] = std::move(c);
    }
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Int& IntPolynomial::leading() const {
    if (is_zero()) return kZero;
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> c = coeffs_;
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& k) const {
    if (k == 0) return {};
    std::vector<Int> c = coeffs_;
    for (auto& v : c) v *= k;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Int> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Int(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::compose_scale() const {
    std::vector<Int> c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

IntPolynomial IntPolynomial::divexact(const IntPolynomial& d) const {
    if (d.is_zero()) throw InexactDivision("divexact: division by zero polynomial");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw InexactDivision("divexact: remainder nonzero");
    // Long division over the rationals, then integrality check.
    std::vector<Rat> rem(coeffs_.begin(), coeffs_.end());
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    const Rat lead = Rat(d.leading());
    std::vector<Rat> quot(coeffs_.size() - dd, Rat(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rat q = rem[k + dd] / lead;
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * Rat(d.coeff(j));
    }
    for (const auto& r : rem)
        if (r != 0) throw InexactDivision("divexact: remainder nonzero");
    std::vector<Int> out(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (denominator(quot[i]) != 1)
            throw InexactDivision("divexact: quotient not integral");
        out[i] = numerator(quot[i]);
    }
    return IntPolynomial(std::move(out));
}

bool IntPolynomial::divisible_by(const IntPolynomial& d) const {
    try {
        (void)divexact(d);
        return true;
    } catch (const InexactDivision&) {
        return false;
    }
}

unsigned IntPolynomial::vanishing_order_at_one() const {
    if (is_zero()) return 0;
    unsigned order = 0;
    IntPolynomial p = *this;
    const IntPolynomial one_minus_z{Int(1), Int(-1)};
    while (!p.is_zero() && p.evaluate(Int(1)) == 0) {
        p = p.divexact(one_minus_z);
        ++order;
    }
    return order;
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Int c = content();
    if (leading() < 0) c = -c;
    std::vector<Int> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / c;
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

nlohmann::json IntPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) {
        if (fits_int64(c))
            arr.push_back(c.convert_to<std::int64_t>());
        else
            arr.push_back(c.str()); // too wide for a JSON number
    }
    return arr;
}

IntPolynomial IntPolynomial::from_json(const nlohmann::json& j) {
    std::vector<Int> c;
    for (const auto& v : j) {
        if (v.is_string())
            c.emplace_back(v.get<std::string>());
        else
            c.emplace_back(v.get<std::int64_t>());
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    // Euclid over Q on primitive parts; small inputs only, so no subresultant
    // bookkeeping is needed.
    IntPolynomial f = a.primitive_part();
    IntPolynomial g = b.primitive_part();
    while (!g.is_zero()) {
        // remainder of f by g over Q, re-primitivized
        std::vector<Rat> rem(f.coeffs().begin(), f.coeffs().end());
        const std::size_t dg = static_cast<std::size_t>(g.degree());
        const Rat lead = Rat(g.leading());
        while (rem.size() > dg) {
            Rat q = rem.back() / lead;
            if (q != 0)
                for (std::size_t j = 0; j <= dg; ++j)
                    rem[rem.size() - 1 - dg + j] -= q * Rat(g.coeff(j));
            rem.pop_back();
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.size() <= dg) break;
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // clear denominators
        Int den = 1;
        for (const auto& r : rem) den = lcm(den, denominator(r));
        std::vector<Int> ri(rem.size());
        for (std::size_t i = 0; i < rem.size(); ++i)
            ri[i] = numerator(rem[i]) * (den / denominator(rem[i]));
        IntPolynomial r = IntPolynomial(std::move(ri)).primitive_part();
        f = g;
        g = r;
    }
    return f.primitive_part();
}

} // namespace gradedev
