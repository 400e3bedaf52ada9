#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradedev/errors.hpp"
#include "gradedev/graph.hpp"
#include "gradedev/hilbert.hpp"

#include <nlohmann/json.hpp>

using namespace gradedev;

namespace {

// Oracle: count independent sets by scanning all vertex subsets.
IntPolynomial f_oracle(const Graph& g) {
    const unsigned n = g.vertices();
    std::vector<Int> counts(n + 1, Int(0));
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool independent = true;
        for (unsigned u = 1; u <= n && independent; ++u) {
            if (!(mask & (std::uint32_t{1} << (u - 1)))) continue;
            if (g.neighbors_mask(u) & mask) independent = false;
        }
        if (independent) counts[static_cast<std::size_t>(__builtin_popcount(mask))] += 1;
    }
    return IntPolynomial(std::move(counts));
}

Graph from_mask(unsigned n, std::uint32_t mask) {
    Graph g(n);
    unsigned bit = 0;
    for (unsigned u = 1; u <= n; ++u)
        for (unsigned v = u + 1; v <= n; ++v) {
            if (mask & (std::uint32_t{1} << bit)) g.add_edge(u, v);
            ++bit;
        }
    return g;
}

} // namespace

TEST_CASE("graph construction and parsing") {
    const Graph c5 = Graph::parse("cycle:5");
    CHECK(c5.vertices() == 5);
    CHECK(c5.edge_count() == 5);
    const Graph lit = Graph::parse("n=5; edges=1-2,2-3,3-4,4-5,5-1");
    CHECK(lit.to_text() == c5.to_text());
    const Graph p4x3 = Graph::parse("disjoint:path:4x3");
    CHECK(p4x3.vertices() == 12);
    CHECK(p4x3.edge_count() == 9);
    CHECK(Graph::parse("star:4").degree(1) == 3);
    CHECK_THROWS_AS(Graph::parse("bogus:3"), InputError);
    CHECK_THROWS_AS(Graph::parse("n=2;edges=1-1"), InputError);
}

TEST_CASE("edge ideals") {
    const MonomialIdeal k3 = edge_ideal(Graph::complete(3));
    CHECK(k3.num_gens() == 3);
    CHECK(k3.max_gen_degree() == 2);
    const MonomialIdeal p4 = edge_ideal(Graph::path(4));
    CHECK(p4.num_gens() == 3);
    CHECK(edge_ideal(Graph(4)).is_zero());
}

TEST_CASE("claw detection") {
    CHECK_FALSE(is_claw_free(Graph::star(4)));
    CHECK(is_claw_free(Graph::complete(5)));
    CHECK(is_claw_free(Graph::cycle(5)));
    CHECK(is_claw_free(Graph::path(6)));
    // star plus an edge between two leaves still contains an induced claw
    Graph g = Graph::star(5);
    g.add_edge(2, 3);
    CHECK_FALSE(is_claw_free(g));
}

TEST_CASE("chordality") {
    CHECK(is_chordal(Graph::complete(4)));
    CHECK(is_chordal(Graph::path(6)));
    CHECK_FALSE(is_chordal(Graph::cycle(4)));
    CHECK_FALSE(is_chordal(Graph::cycle(5)));
    CHECK(is_chordal(Graph::star(5)));
    // C4 plus one chord is chordal
    Graph g = Graph::cycle(4);
    g.add_edge(1, 3);
    CHECK(is_chordal(g));
    // complement checks
    CHECK(complement_is_chordal(Graph::complete(4)));
    CHECK_FALSE(complement_is_chordal(Graph::cycle(5))); // self-complementary
    CHECK(complement_is_chordal(Graph::cycle(4)));       // complement is 2K_2
}

TEST_CASE("independence f-polynomials") {
    CHECK(independence_f_polynomial(Graph::complete(5)) == IntPolynomial{Int(1), Int(5)});
    CHECK(independence_f_polynomial(Graph::path(4)) ==
          IntPolynomial{Int(1), Int(4), Int(3)});
    CHECK(independence_f_polynomial(Graph::cycle(4)) ==
          IntPolynomial{Int(1), Int(4), Int(2)});
    // edgeless graph: binomial coefficients
    CHECK(independence_f_polynomial(Graph(3)) == IntPolynomial{Int(1), Int(3), Int(3), Int(1)});
    CHECK_THROWS_AS(independence_f_polynomial(Graph::path(9), 8), TooManyVertices);
}

TEST_CASE("f-polynomial matches the subset oracle on all 5-vertex graphs") {
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        const Graph g = from_mask(5, mask);
        CHECK(independence_f_polynomial(g) == f_oracle(g));
    }
}

TEST_CASE("f_to_h examples") {
    CHECK(f_to_h(IntPolynomial{Int(1), Int(4), Int(3)}, 2) == IntPolynomial{Int(1), Int(2)});
    CHECK(f_to_h(IntPolynomial{Int(1), Int(5)}, 1) == IntPolynomial{Int(1), Int(4)});
    CHECK(f_to_h(IntPolynomial::constant(1), 0) == IntPolynomial::constant(1));
    CHECK_THROWS_AS(f_to_h(IntPolynomial{Int(1), Int(4), Int(3)}, 1), DegreeMismatch);
}

TEST_CASE("two routes to the h-polynomial agree on all graphs up to 5 vertices") {
    for (unsigned n = 1; n <= 5; ++n) {
        const unsigned slots = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots); ++mask) {
            const Graph g = from_mask(n, mask);
            const IntPolynomial f = independence_f_polynomial(g);
            const IntPolynomial via_f = f_to_h(f, static_cast<unsigned>(f.degree()));
            const HilbertData hd = hilbert_data(edge_ideal(g));
            CHECK(via_f == hd.h_polynomial);
            CHECK(static_cast<unsigned>(f.degree()) == hd.dimension);
        }
    }
}

TEST_CASE("closed-form roots of cycles and paths") {
    const ClosedFormRoot c15 = cycle_root(5, 1);
    CHECK(std::abs(c15.value.convert_to<double>() - (-0.2763932022500210)) < 1e-14);
    CHECK(c15.expression == "-1/(2*(1+cos(1*pi/5)))");
    const ClosedFormRoot p14 = path_root(4, 1);
    // cos(pi/3) = 1/2 exactly, so the root is -1/3
    CHECK(abs(p14.value - Real(-1) / 3) < Real("1e-45"));
    CHECK_THROWS_AS(cycle_root(5, 3), IndexOutOfRange);
    CHECK_THROWS_AS(path_root(4, 3), IndexOutOfRange);
}

TEST_CASE("aberth root finder on h = 1 + 3z") {
    const auto roots = complex_roots(IntPolynomial{Int(1), Int(3)});
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0].value - std::complex<double>(-1.0 / 3, 0)) < 1e-12);
    CHECK(roots[0].residual < 1e-12);
}

TEST_CASE("aberth handles multiple roots through the squarefree part") {
    const IntPolynomial h = IntPolynomial{Int(1), Int(2)}.pow(3);
    const auto roots = complex_roots(h);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].multiplicity == 3);
    CHECK(std::abs(roots[0].value - std::complex<double>(-0.5, 0)) < 1e-12);
}

TEST_CASE("probe on tiny sweeps") {
    const ProbeReport r3 = question58_probe(3);
    CHECK(r3.graphs_scanned == 2 + 8 + 1); // n=1: 1, n=2: 2, n=3: 8
    CHECK(r3.ties.empty());
    CHECK(r3.clawfree_violations.empty());
    CHECK(r3.residual_failures == 0);

    const ProbeReport r4 = question58_probe(4);
    CHECK(r4.clawfree_violations.empty());
    CHECK(r4.ties.empty());
    CHECK_THROWS_AS(question58_probe(8), TooManyVertices);
    const nlohmann::json j = r4.to_json();
    CHECK(j.at("graphs_scanned").get<std::uint64_t>() == r4.graphs_scanned);
}
