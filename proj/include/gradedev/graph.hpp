#pragma once

#include "gradedev/monomial_ideal.hpp"
#include "gradedev/polynomial.hpp"

#include <nlohmann/json_fwd.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace gradedev {

/// Simple undirected graph on vertices 1..n (no loops, no multi-edges).
class Graph {
public:
    explicit Graph(unsigned n);

    /// Accepts "n=5; edges=1-2,2-3" literals and the named constructors
    /// path:n, cycle:n, complete:n, star:n, disjoint:<spec>xm.
    static Graph parse(const std::string& spec);
    static Graph path(unsigned n);
    static Graph cycle(unsigned n);
    static Graph complete(unsigned n);
    static Graph star(unsigned n);

    unsigned vertices() const { return n_; }
    void add_edge(unsigned u, unsigned v); // 1-based
    bool has_edge(unsigned u, unsigned v) const;
    unsigned degree(unsigned v) const;
    std::uint32_t neighbors_mask(unsigned v) const { return adj_[v - 1]; }
    std::vector<std::pair<unsigned, unsigned>> edges() const;
    std::size_t edge_count() const;

    Graph complement() const;
    Graph disjoint_union(const Graph& o) const;

    std::string to_text() const;

private:
    unsigned n_;
    std::vector<std::uint32_t> adj_;
};

/// Squarefree quadratic ideal (T_i T_j : ij an edge) in `vertices` variables.
MonomialIdeal edge_ideal(const Graph& g);

/// No vertex has three pairwise-nonadjacent neighbors.
bool is_claw_free(const Graph& g);

/// Maximum-cardinality search plus perfect-elimination-ordering verification.
bool is_chordal(const Graph& g);

bool complement_is_chordal(const Graph& g);

using FPolynomial = IntPolynomial;

/// f-polynomial of the independence complex: coefficient of z^k counts
/// independent sets of cardinality k (constant term 1).
FPolynomial independence_f_polynomial(const Graph& g, unsigned vertex_cap = 30);

/// Largest independent set size (= degree of the f-polynomial).
unsigned independence_number(const Graph& g, unsigned vertex_cap = 30);

/// h(z) = (1-z)^d f(z/(1-z)), exact; throws DegreeMismatch when d < deg f.
IntPolynomial f_to_h(const IntPolynomial& f, unsigned d);

/// Closed-form root of the independence f-polynomial together with a
/// high-precision numeric value.
struct ClosedFormRoot {
    std::string expression;
    Real value;
};

/// -1 / (2 (1 + cos((2s-1) pi / n))), 1 <= s <= floor(n/2).
ClosedFormRoot cycle_root(unsigned n, unsigned s);
/// -1 / (2 (1 + cos(2 s pi / (n+2)))), 1 <= s <= floor((n+1)/2).
ClosedFormRoot path_root(unsigned n, unsigned s);

/// All complex roots in double precision (Aberth iteration) with residual
/// verification; returns roots of the squarefree part with multiplicities.
struct NumericRoot {
    std::complex<double> value;
    unsigned multiplicity;
    double residual;
};
std::vector<NumericRoot> complex_roots(const IntPolynomial& p);

struct ProbeFinding {
    std::string graph;
    std::string h;
    std::vector<std::complex<double>> tied_roots;
    double min_modulus = 0;
};

struct ProbeReport {
    unsigned max_vertices = 0;
    double tie_rel_tol = 0;
    std::uint64_t graphs_scanned = 0;
    std::uint64_t with_roots = 0;
    std::uint64_t min_root_real_negative = 0;
    std::uint64_t clawfree_checked = 0;
    std::uint64_t clawfree_all_real = 0;
    /// Graphs whose h has two distinct roots tying for minimum modulus
    /// within the tolerance; flagged for exact re-examination, not asserted.
    std::vector<ProbeFinding> ties;
    /// Claw-free graphs whose h failed the exact all-real-roots check
    /// (expected empty).
    std::vector<std::string> clawfree_violations;
    std::uint64_t residual_failures = 0;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// Sweep all graphs on <= n_max vertices (edge subsets, no isomorphism
/// reduction), examine the roots of h, and report minimum-modulus ties.
/// Evidence only; never fails.
ProbeReport question58_probe(unsigned n_max = 6, double tie_rel_tol = 1e-8);

} // namespace gradedev
