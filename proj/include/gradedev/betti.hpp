#pragma once

#include "gradedev/monomial_ideal.hpp"
#include "gradedev/polynomial.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gradedev {

struct BettiCaps {
    unsigned max_vars = 6;
    unsigned max_gens = 12;
    std::size_t lattice_cap = 100000;
};

/// Componentwise maxima of all subsets of the generators, deduplicated.
/// Contains the zero vector (empty subset).
struct LcmLattice {
    std::vector<std::vector<unsigned>> elements; // sorted
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap = 100000);

/// Graded Betti numbers of S/I; beta(0,0) = 1, beta(i,j) = 0 for i > n.
class BettiTable {
public:
    explicit BettiTable(unsigned n) : n_(n) {}

    unsigned vars() const { return n_; }
    std::uint64_t entry(unsigned i, unsigned j) const;
    std::uint64_t total(unsigned i) const;
    /// beta_0 .. beta_pd as a vector (index = homological degree).
    std::vector<std::uint64_t> totals() const;
    unsigned projective_dimension() const;
    unsigned max_internal_degree() const;

    void add(unsigned i, unsigned j, std::uint64_t count);
    void add_multigraded(unsigned i, std::vector<unsigned> multidegree, std::uint64_t count);

    const std::map<std::pair<unsigned, unsigned>, std::uint64_t>& graded() const {
        return graded_;
    }
    const std::map<std::pair<unsigned, std::vector<unsigned>>, std::uint64_t>&
    multigraded() const {
        return multigraded_;
    }

    /// sum_i (-1)^i sum_j beta_{i,j} z^j  (Euler characteristic of the resolution).
    IntPolynomial alternating_sum() const;

    bool operator==(const BettiTable& o) const {
        return n_ == o.n_ && graded_ == o.graded_;
    }

    /// Macaulay2-style triangular layout (rows j - i, columns i).
    std::string to_text() const;
    nlohmann::json to_json() const;

private:
    unsigned n_;
    std::map<std::pair<unsigned, unsigned>, std::uint64_t> graded_;
    std::map<std::pair<unsigned, std::vector<unsigned>>, std::uint64_t> multigraded_;
};

/// Exact multigraded Betti numbers via Koszul strand homology over the lcm
/// lattice, ranks by fraction-free Gaussian elimination.
BettiTable betti_table(const MonomialIdeal& ideal, const BettiCaps& caps = {});

/// Closed form for stable ideals; independent cross-check for betti_table.
/// Throws NotStable when the input is not stable.
BettiTable eliahou_kervaire(const MonomialIdeal& ideal);

/// True iff all generators share one degree d and beta_{i,j}(S/I) = 0 for
/// every i >= 1 with j != d + i - 1.
bool has_linear_resolution(const MonomialIdeal& ideal, const BettiCaps& caps = {});

enum class GolodStatus { StronglyStable, LinearResolution, Principal, Unknown };

/// One-sided Golod certification; Unknown never claims non-Golodness.
struct GolodCertificate {
    GolodStatus status = GolodStatus::Unknown;
    bool certified() const { return status != GolodStatus::Unknown; }
    std::string to_string() const;
};

GolodCertificate golod_certificate(const MonomialIdeal& ideal, const BettiCaps& caps = {});

/// Rank of an integer matrix by Bareiss elimination (exact).
std::size_t integer_matrix_rank(std::vector<std::vector<Int>> m);

} // namespace gradedev
