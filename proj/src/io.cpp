#include "gradedev/io.hpp"

#include "gradedev/errors.hpp"

#include <cctype>
#include <map>

namespace gradedev {

namespace {

struct PolyParser {
    std::string s;
    std::size_t pos = 0;

    explicit PolyParser(std::string text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }

    bool done() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    void expect(char c) {
        if (peek() != c)
            throw InputError(std::string("polynomial parse: expected '") + c + "' at position " +
                             std::to_string(pos) + " in '" + s + "'");
        ++pos;
    }

    IntPolynomial parse() {
        IntPolynomial p = expression();
        if (!done())
            throw InputError("polynomial parse: trailing input at position " +
                             std::to_string(pos) + " in '" + s + "'");
        return p;
    }

    IntPolynomial expression() {
        IntPolynomial acc;
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos;
        }
        acc = negate ? -term() : term();
        while (peek() == '+' || peek() == '-') {
            const bool minus = peek() == '-';
            ++pos;
            acc = minus ? acc - term() : acc + term();
        }
        return acc;
    }

    IntPolynomial term() {
        IntPolynomial acc = factor();
        while (peek() == '*') {
            ++pos;
            acc = acc * factor();
        }
        return acc;
    }

    IntPolynomial factor() {
        IntPolynomial base = primary();
        if (peek() == '^') {
            ++pos;
            base = base.pow(static_cast<unsigned>(natural()));
        }
        return base;
    }

    IntPolynomial primary() {
        if (peek() == '(') {
            ++pos;
            IntPolynomial p = expression();
            expect(')');
            return p;
        }
        if (peek() == '-') { // unary minus inside a factor, e.g. "-(...)^5"
            ++pos;
            return -primary();
        }
        if (peek() == 'z') {
            ++pos;
            return IntPolynomial{Int(0), Int(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(peek())))
            return IntPolynomial::constant(Int(natural_string()));
        throw InputError("polynomial parse: unexpected character '" + std::string(1, peek()) +
                         "' at position " + std::to_string(pos) + " in '" + s + "'");
    }

    std::string natural_string() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(s[pos++]);
        if (digits.empty())
            throw InputError("polynomial parse: expected digits at position " +
                             std::to_string(pos));
        return digits;
    }

    unsigned long natural() { return std::stoul(natural_string()); }
};

unsigned variable_index(const std::string& token, unsigned n, const std::string& context) {
    static const std::map<char, unsigned> bare{{'x', 1}, {'y', 2}, {'z', 3}, {'w', 4}};
    if (token.empty()) throw InputError("ideal parse: empty variable in " + context);
    const char head = token[0];
    if (token.size() == 1) {
        auto it = bare.find(head);
        if (it == bare.end())
            throw InputError("ideal parse: unknown variable '" + token + "'");
        if (it->second > n)
            throw InputError("ideal parse: variable '" + token + "' exceeds --vars");
        return it->second;
    }
    if (head != 'x' && head != 'T' && head != 't')
        throw InputError("ideal parse: variables look like x1, x2, ... (got '" + token + "')");
    const std::string digits = token.substr(1);
    if (digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("ideal parse: bad variable index in '" + token + "'");
    const unsigned idx = static_cast<unsigned>(std::stoul(digits));
    if (idx == 0 || idx > n)
        throw InputError("ideal parse: variable index out of range in '" + token + "'");
    return idx;
}

} // namespace

MonomialIdeal parse_ideal(const std::string& text, unsigned n,
                          MonomialIdeal::DegreePolicy policy) {
    std::string clean;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
    std::vector<Monomial> gens;
    std::size_t start = 0;
    while (start <= clean.size()) {
        std::size_t comma = clean.find(',', start);
        const std::string piece =
            clean.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        start = comma == std::string::npos ? clean.size() + 1 : comma + 1;
        if (piece.empty()) continue;
        std::vector<unsigned> exponents(n, 0);
        std::size_t fs = 0;
        while (fs < piece.size()) {
            std::size_t star = piece.find('*', fs);
            std::string factor =
                piece.substr(fs, star == std::string::npos ? std::string::npos : star - fs);
            fs = star == std::string::npos ? piece.size() : star + 1;
            unsigned exp = 1;
            const std::size_t caret = factor.find('^');
            if (caret != std::string::npos) {
                const std::string e = factor.substr(caret + 1);
                if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos)
                    throw InputError("ideal parse: bad exponent in '" + factor + "'");
                exp = static_cast<unsigned>(std::stoul(e));
                factor = factor.substr(0, caret);
            }
            exponents[variable_index(factor, n, piece) - 1] += exp;
        }
        gens.emplace_back(std::move(exponents));
    }
    return MonomialIdeal::make(n, std::move(gens), policy);
}

IntPolynomial parse_polynomial(const std::string& text) {
    return PolyParser(text).parse();
}

RationalFunction parse_rational_function(const std::string& text) {
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            if (slash != std::string::npos)
                throw InputError("rational function parse: more than one top-level '/'");
            slash = i;
        }
    }
    if (slash == std::string::npos)
        return RationalFunction::polynomial(parse_polynomial(text));
    return RationalFunction(parse_polynomial(text.substr(0, slash)),
                            parse_polynomial(text.substr(slash + 1)));
}

} // namespace gradedev
