#include "gradedev/numeric.hpp"

#include <stdexcept>

namespace gradedev {

Int binomial(const Int& n, std::uint64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k == 0) return 1;
    if (n < Int(k)) return 0;
    Int result = 1;
    // Multiply/divide alternately; each prefix is an exact binomial.
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= n - Int(i);
        result /= Int(i + 1);
    }
    return result;
}

int mobius(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mobius: m must be >= 1");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0; // square factor
            sign = -sign;
        }
    }
    if (m > 1) sign = -sign;
    return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Real to_real(const Rat& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

bool fits_int64(const Int& v) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    return v >= lo && v <= hi;
}

std::string to_decimal_string(const Int& v) { return v.str(); }

std::string to_decimal_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace gradedev
