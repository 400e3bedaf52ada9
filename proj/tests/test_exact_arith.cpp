#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradedev/errors.hpp"
#include "gradedev/series.hpp"

#include <nlohmann/json.hpp>

#include <random>

using namespace gradedev;

namespace {

Rat rq(long n, long d = 1) { return Rat(Int(n), Int(d)); }

// Independent long-division oracle: naive schoolbook quotient digit by digit,
// written against the series interface rather than reusing it.
std::vector<Rat> long_division_oracle(const IntPolynomial& num, const IntPolynomial& den,
                                      std::size_t order) {
    std::vector<Rat> rem(order + 1, Rat(0));
    for (std::size_t i = 0; i <= order && static_cast<int>(i) <= num.degree(); ++i)
        rem[i] = Rat(num.coeff(i));
    std::vector<Rat> out(order + 1, Rat(0));
    for (std::size_t k = 0; k <= order; ++k) {
        const Rat digit = rem[k] / Rat(den.coeff(0));
        out[k] = digit;
        for (std::size_t j = 0; j + k <= order; ++j)
            rem[k + j] -= digit * Rat(den.coeff(j));
    }
    return out;
}

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long amp) {
    std::vector<Int> c;
    const int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_degree + 1));
    for (int i = 0; i <= deg; ++i)
        c.emplace_back(static_cast<long>(rng() % (2 * amp + 1)) - amp);
    return IntPolynomial(std::move(c));
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, long amp) {
    std::vector<Rat> c;
    for (std::size_t i = 0; i <= order; ++i) {
        const long num = static_cast<long>(rng() % (2 * amp + 1)) - amp;
        const long den = 1 + static_cast<long>(rng() % 7);
        c.push_back(rq(num, den));
    }
    return TruncatedSeries(order, std::move(c));
}

} // namespace

TEST_CASE("polynomial basics") {
    const IntPolynomial one_plus{Int(1), Int(1)};
    const IntPolynomial one_minus{Int(1), Int(-1)};
    CHECK(one_plus * one_minus == IntPolynomial{Int(1), Int(0), Int(-1)});
    CHECK(one_plus.pow(2) == IntPolynomial{Int(1), Int(2), Int(1)});
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(one_plus.evaluate(Int(3)) == 4);
    CHECK(one_plus.derivative() == IntPolynomial::constant(1));
}

TEST_CASE("compose_scale flips odd coefficients") {
    // 1 + 5z + 9z^2 + 5z^3 -> 1 - 5z + 9z^2 - 5z^3
    const IntPolynomial hs{Int(1), Int(5), Int(9), Int(5)};
    CHECK(hs.compose_scale() == IntPolynomial{Int(1), Int(-5), Int(9), Int(-5)});
    CHECK(hs.compose_scale().compose_scale() == hs);
}

TEST_CASE("divexact succeeds and fails correctly") {
    const IntPolynomial p{Int(1), Int(0), Int(-2), Int(1)}; // 1 - 2z^2 + z^3
    const IntPolynomial one_minus{Int(1), Int(-1)};
    // exactly divisible: 1 - 2z^2 + z^3 = (1 - z)(1 + z - z^2)
    CHECK(p.divexact(one_minus) == IntPolynomial{Int(1), Int(1), Int(-1)});
    // a genuinely inexact division (remainder nonzero at z = -1)
    CHECK_THROWS_AS(p.divexact(IntPolynomial{Int(1), Int(1)}), InexactDivision);
    CHECK_THROWS_AS(p.divexact(one_minus.pow(2)), InexactDivision);
}

TEST_CASE("vanishing order at one") {
    const IntPolynomial one_minus{Int(1), Int(-1)};
    CHECK(one_minus.pow(3).vanishing_order_at_one() == 3);
    CHECK(IntPolynomial{Int(1), Int(2)}.vanishing_order_at_one() == 0);
    CHECK((IntPolynomial{Int(1), Int(0), Int(-2), Int(1)}).vanishing_order_at_one() == 1);
}

TEST_CASE("geometric series expansion") {
    const RationalFunction f(IntPolynomial::constant(1), IntPolynomial{Int(1), Int(-1)});
    const TruncatedSeries s = series_from_rational(f, 4);
    for (std::size_t i = 0; i <= 4; ++i) CHECK(s.coeff(i) == 1);
}

TEST_CASE("(1+z)^2/(1-z^2)^2 expands like 1/(1-z)^2") {
    const RationalFunction f(IntPolynomial{Int(1), Int(1)}.pow(2),
                             IntPolynomial{Int(1), Int(0), Int(-1)}.pow(2));
    const TruncatedSeries s = series_from_rational(f, 3);
    const auto oracle = long_division_oracle(f.num, f.den, 3);
    for (std::size_t i = 0; i <= 3; ++i) {
        CHECK(s.coeff(i) == oracle[i]);
        CHECK(s.coeff(i) == Rat(Int(i + 1)));
    }
}

TEST_CASE("expansion of a degree-7 denominator with unit constant coefficient") {
    // (z-1)(z^6 - 3z^5 + z^4 + 5z^3 - 5z^2 + 4z - 1), constant term +1
    const IntPolynomial a{Int(-1), Int(1)};
    const IntPolynomial b{Int(-1), Int(4), Int(-5), Int(5), Int(1), Int(-3), Int(1)};
    const RationalFunction f(IntPolynomial::constant(1), a * b);
    const TruncatedSeries s = series_from_rational(f, 2);
    const auto oracle = long_division_oracle(f.num, f.den, 2);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 5);
    CHECK(s.coeff(0) == oracle[0]);
    CHECK(s.coeff(1) == oracle[1]);
    CHECK(s.coeff(2) == oracle[2]);
}

TEST_CASE("denominator vanishing at zero is rejected") {
    const RationalFunction f(IntPolynomial::constant(1), IntPolynomial{Int(0), Int(1)});
    CHECK_THROWS_AS(series_from_rational(f, 3), DenominatorVanishesAtZero);
}

TEST_CASE("series log of 1/(1-z)") {
    const RationalFunction f(IntPolynomial::constant(1), IntPolynomial{Int(1), Int(-1)});
    const TruncatedSeries lg = series_log(series_from_rational(f, 4));
    CHECK(lg.coeff(0) == 0);
    CHECK(lg.coeff(1) == 1);
    CHECK(lg.coeff(2) == rq(1, 2));
    CHECK(lg.coeff(3) == rq(1, 3));
    CHECK(lg.coeff(4) == rq(1, 4));
}

TEST_CASE("series log of 1+z alternates") {
    const TruncatedSeries s = series_from_polynomial(IntPolynomial{Int(1), Int(1)}, 4);
    const TruncatedSeries lg = series_log(s);
    CHECK(lg.coeff(1) == 1);
    CHECK(lg.coeff(2) == rq(-1, 2));
    CHECK(lg.coeff(3) == rq(1, 3));
    CHECK(lg.coeff(4) == rq(-1, 4));
}

TEST_CASE("series log of (1-z)^-2 doubles the harmonic series") {
    const RationalFunction f(IntPolynomial::constant(1), IntPolynomial{Int(1), Int(-1)}.pow(2));
    const TruncatedSeries lg = series_log(series_from_rational(f, 3));
    CHECK(lg.coeff(1) == 2);
    CHECK(lg.coeff(2) == 1);
    CHECK(lg.coeff(3) == rq(2, 3));
}

TEST_CASE("series log requires unit constant term") {
    const TruncatedSeries s = series_from_polynomial(IntPolynomial{Int(2), Int(1)}, 3);
    CHECK_THROWS_AS(series_log(s), ConstantTermNotOne);
}

TEST_CASE("exp-log round trip is exact") {
    std::mt19937_64 rng(20240117);
    for (int trial = 0; trial < 40; ++trial) {
        TruncatedSeries s = random_series(rng, 10, 5);
        std::vector<Rat> c = s.coeffs();
        c[0] = 1;
        const TruncatedSeries unit(10, std::move(c));
        CHECK(series_exp(series_log(unit)) == unit);
    }
}

TEST_CASE("multiplication is associative and commutative at every order") {
    std::mt19937_64 rng(911);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t order = 1 + rng() % 12;
        const TruncatedSeries a = random_series(rng, order, 6);
        const TruncatedSeries b = random_series(rng, order, 6);
        const TruncatedSeries c = random_series(rng, order, 6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("expansion order is prefix-stable") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        IntPolynomial den = random_poly(rng, 6, 4);
        std::vector<Int> dd = den.coeffs();
        if (dd.empty()) dd.push_back(Int(0));
        dd[0] = 1 + static_cast<long>(rng() % 3); // nonzero at origin
        den = IntPolynomial(std::move(dd));
        const IntPolynomial num = random_poly(rng, 6, 4);
        const RationalFunction f(num, den);
        const std::size_t order = 2 + rng() % 10;
        const TruncatedSeries big = series_from_rational(f, order);
        const TruncatedSeries small = series_from_rational(f, order - 1);
        CHECK(big.truncate(order - 1) == small);
    }
}

TEST_CASE("rational function equality is reduction invariant") {
    const RationalFunction a(IntPolynomial{Int(1), Int(1)}.pow(2),
                             IntPolynomial{Int(1), Int(0), Int(-2), Int(-1)});
    // (1+z)^2 / (1 - 2z^2 - z^3) == (1+z) / (1 - z - z^2)
    const RationalFunction b(IntPolynomial{Int(1), Int(1)},
                             IntPolynomial{Int(1), Int(-1), Int(-1)});
    CHECK(a == b);
    const RationalFunction c(IntPolynomial{Int(1), Int(1)},
                             IntPolynomial{Int(1), Int(-2)});
    CHECK(a != c);
    CHECK(a.reduced().num == b.num);
    CHECK(a.reduced().den == b.den);
}

TEST_CASE("polynomial gcd") {
    const IntPolynomial a = IntPolynomial{Int(1), Int(1)}.pow(2) * IntPolynomial{Int(1), Int(-2)};
    const IntPolynomial b = IntPolynomial{Int(1), Int(1)} * IntPolynomial{Int(3), Int(1)};
    const IntPolynomial g = poly_gcd(a, b);
    CHECK(g == IntPolynomial{Int(1), Int(1)});
    CHECK(poly_gcd(a, IntPolynomial{}) == a.primitive_part());
}

TEST_CASE("json round trip for polynomials and rational functions") {
    const IntPolynomial p{Int(1), Int(0), Int(-2), Int(1)};
    CHECK(IntPolynomial::from_json(p.to_json()) == p);
    const IntPolynomial huge{Int(1), Int("123456789012345678901234567890")};
    CHECK(IntPolynomial::from_json(huge.to_json()) == huge);
    const RationalFunction f(p, IntPolynomial{Int(1), Int(-1)});
    const RationalFunction back = RationalFunction::from_json(f.to_json());
    CHECK(back == f);
}
