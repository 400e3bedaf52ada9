#include "gradedev/rational_function.hpp"

#include "gradedev/errors.hpp"

#include <nlohmann/json.hpp>

namespace gradedev {

RationalFunction::RationalFunction(IntPolynomial n, IntPolynomial d)
    : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw InputError("rational function: zero denominator");
}

RationalFunction RationalFunction::polynomial(IntPolynomial p) {
    return RationalFunction(std::move(p), IntPolynomial::constant(1));
}

Rat RationalFunction::value_at_zero() const {
    if (den.coeff(0) == 0)
        throw DenominatorVanishesAtZero("rational function: denominator vanishes at z = 0");
    return Rat(num.coeff(0)) / Rat(den.coeff(0));
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num * o.num, den * o.den);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num * o.den + o.num * den, den * o.den);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num * o.den - o.num * den, den * o.den);
}

RationalFunction RationalFunction::reciprocal() const {
    if (num.is_zero()) throw InputError("rational function: reciprocal of zero");
    return RationalFunction(den, num);
}

RationalFunction RationalFunction::compose_scale() const {
    return RationalFunction(num.compose_scale(), den.compose_scale());
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num * o.den == o.num * den;
}

RationalFunction RationalFunction::reduced() const {
    if (num.is_zero()) return RationalFunction({}, IntPolynomial::constant(1));
    IntPolynomial g = poly_gcd(num, den);
    IntPolynomial n = num.divexact(g);
    IntPolynomial d = den.divexact(g);
    Int c = gcd(n.content(), d.content());
    if (d.coeff(0) < 0 || (d.coeff(0) == 0 && d.leading() < 0)) c = -c;
    n = n.divexact(IntPolynomial::constant(c));
    d = d.divexact(IntPolynomial::constant(c));
    return RationalFunction(std::move(n), std::move(d));
}

std::string RationalFunction::to_string(std::string_view var) const {
    return "(" + num.to_string(var) + ") / (" + den.to_string(var) + ")";
}

nlohmann::json RationalFunction::to_json() const {
    return nlohmann::json{{"num", num.to_json()}, {"den", den.to_json()}};
}

RationalFunction RationalFunction::from_json(const nlohmann::json& j) {
    return RationalFunction(IntPolynomial::from_json(j.at("num")),
                            IntPolynomial::from_json(j.at("den")));
}

} // namespace gradedev
