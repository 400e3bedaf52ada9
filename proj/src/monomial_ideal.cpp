#include "gradedev/monomial_ideal.hpp"

#include "gradedev/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iostream>
#include <numeric>
#include <sstream>

namespace gradedev {

unsigned Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

bool Monomial::divides(const Monomial& o) const {
    if (exponents.size() != o.exponents.size()) return false;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > o.exponents[i]) return false;
    return true;
}

unsigned Monomial::max_index() const {
    for (std::size_t i = exponents.size(); i-- > 0;)
        if (exponents[i] > 0) return static_cast<unsigned>(i + 1);
    return 0;
}

std::uint64_t Monomial::support() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > 0) mask |= (std::uint64_t{1} << i);
    return mask;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        m.exponents[i] = std::max(m.exponents[i], b.exponents[i]);
    return m;
}

Monomial Monomial::colon(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        m.exponents[i] = m.exponents[i] > b.exponents[i] ? m.exponents[i] - b.exponents[i] : 0;
    return m;
}

Monomial Monomial::times_variable(unsigned var) const {
    Monomial m = *this;
    m.exponents.at(var - 1) += 1;
    return m;
}

Monomial Monomial::exchange(unsigned i, unsigned j) const {
    Monomial m = *this;
    m.exponents.at(j - 1) -= 1;
    m.exponents.at(i - 1) += 1;
    return m;
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << (i + 1);
        if (exponents[i] > 1) os << "^" << exponents[i];
    }
    return os.str();
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    return a.exponents > b.exponents;
}

MonomialIdeal MonomialIdeal::make(unsigned n, std::vector<Monomial> gens, DegreePolicy policy) {
    for (const auto& g : gens) {
        if (g.exponents.size() != n)
            throw InputError("monomial ideal: generator has wrong variable count");
        if (g.degree() < 2) {
            if (policy == DegreePolicy::Strict)
                throw GeneratorDegreeBelowTwo("monomial ideal: generator " + g.to_string() +
                                              " has degree < 2");
            if (policy == DegreePolicy::Warn)
                std::cerr << "[gradedev] warning: generator " << g.to_string()
                          << " has degree < 2\n";
        }
    }
    std::sort(gens.begin(), gens.end(), lex_greater);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens) {
            if (&h == &g || !(h.divides(g))) continue;
            if (h == g) continue;
            redundant = true;
            break;
        }
        if (!redundant) minimal.push_back(g);
    }
    MonomialIdeal ideal(n);
    ideal.gens_ = std::move(minimal);
    return ideal;
}

unsigned MonomialIdeal::max_gen_degree() const {
    unsigned d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty()) return "(0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].to_string();
    }
    os << ")";
    return os.str();
}

nlohmann::json MonomialIdeal::to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : gens_) gens.push_back(g.exponents);
    return nlohmann::json{{"n", n_}, {"gens", gens}};
}

MonomialIdeal MonomialIdeal::from_json(const nlohmann::json& j) {
    unsigned n = j.at("n").get<unsigned>();
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens"))
        gens.emplace_back(g.get<std::vector<unsigned>>());
    return make(n, std::move(gens), DegreePolicy::Warn);
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens, unsigned n,
                         MonomialIdeal::DegreePolicy policy) {
    return MonomialIdeal::make(n, gens, policy);
}

std::vector<Monomial> monomials_of_degree(unsigned n, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(n, 0);
    // Recursive descent emits in lex-descending order.
    auto rec = [&](auto&& self, unsigned var, unsigned rem) -> void {
        if (var == n - 1) {
            e[var] = rem;
            out.emplace_back(e);
            e[var] = 0;
            return;
        }
        for (unsigned v = rem + 1; v-- > 0;) {
            e[var] = v;
            self(self, var + 1, rem - v);
        }
        e[var] = 0;
    };
    if (n == 0) {
        if (degree == 0) out.emplace_back(std::vector<unsigned>{});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

Int monomial_count(unsigned n, unsigned degree) {
    if (n == 0) return degree == 0 ? 1 : 0;
    return binomial(Int(n) + Int(degree) - 1, degree);
}

} // namespace gradedev
