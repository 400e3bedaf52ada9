#pragma once

#include "gradedev/numeric.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace gradedev {

/// Monomial in a fixed number of variables, stored as its exponent vector.
struct Monomial {
    std::vector<unsigned> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<unsigned> e) : exponents(std::move(e)) {}

    unsigned degree() const;
    bool is_one() const { return degree() == 0; }
    bool divides(const Monomial& o) const;
    /// 1-based index of the largest variable dividing this monomial; 0 for 1.
    unsigned max_index() const;
    /// Bitmask of variables with positive exponent (variable i -> bit i-1).
    std::uint64_t support() const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    /// a : b, i.e. exponentwise max(a - b, 0).
    static Monomial colon(const Monomial& a, const Monomial& b);
    /// this * T_var (1-based).
    Monomial times_variable(unsigned var) const;
    /// this * T_i / T_j (1-based); requires T_j | this.
    Monomial exchange(unsigned i, unsigned j) const;

    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
    bool operator<(const Monomial& o) const { return exponents < o.exponents; }

    std::string to_string() const; // "x1^2*x3"
};

/// Lexicographic order with T_1 > T_2 > ... > T_n, on monomials of any degree.
bool lex_greater(const Monomial& a, const Monomial& b);

/// Monomial ideal in S = k[T_1..T_n], stored by its unique minimal generating
/// set, sorted lex-descending.  The zero ideal has no generators.
class MonomialIdeal {
public:
    enum class DegreePolicy { Warn, Strict, Silent };

    explicit MonomialIdeal(unsigned n) : n_(n) {}
    /// Minimalizes the given generators (drops 0-exponent duplicates and any
    /// generator divisible by another).  Generators of degree < 2 trigger the
    /// policy: Warn prints to stderr, Strict throws GeneratorDegreeBelowTwo.
    static MonomialIdeal make(unsigned n, std::vector<Monomial> gens,
                              DegreePolicy policy = DegreePolicy::Warn);

    unsigned vars() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t num_gens() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    unsigned max_gen_degree() const;

    /// Membership: divisible by some minimal generator.
    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& o) const {
        return n_ == o.n_ && gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    std::string to_string() const;
    nlohmann::json to_json() const;
    static MonomialIdeal from_json(const nlohmann::json& j);

private:
    unsigned n_;
    std::vector<Monomial> gens_;
};

/// The spec-level minimalization entry point (same as MonomialIdeal::make).
MonomialIdeal minimalize(const std::vector<Monomial>& gens, unsigned n,
                         MonomialIdeal::DegreePolicy policy = MonomialIdeal::DegreePolicy::Warn);

/// All monomials of the given degree in n variables, lex-descending.
std::vector<Monomial> monomials_of_degree(unsigned n, unsigned degree);

/// Number of monomials of the given degree in n variables.
Int monomial_count(unsigned n, unsigned degree);

} // namespace gradedev
