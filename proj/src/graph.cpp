#include "gradedev/graph.hpp"

#include "gradedev/errors.hpp"
#include "gradedev/sturm.hpp"

#include <boost/math/constants/constants.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace gradedev {

namespace {

constexpr unsigned kMaxVertices = 32; // adjacency masks are 32-bit

unsigned parse_uint(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("graph spec: expected a number, got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

} // namespace

Graph::Graph(unsigned n) : n_(n), adj_(n, 0) {
    if (n == 0) throw InputError("graph: at least one vertex required");
    if (n > kMaxVertices) throw TooManyVertices("graph: at most 32 vertices supported");
}

Graph Graph::path(unsigned n) {
    Graph g(n);
    for (unsigned v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(unsigned n) {
    if (n < 3) throw InputError("cycle: at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n, 1);
    return g;
}

Graph Graph::complete(unsigned n) {
    Graph g(n);
    for (unsigned u = 1; u <= n; ++u)
        for (unsigned v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::star(unsigned n) {
    Graph g(n);
    for (unsigned v = 2; v <= n; ++v) g.add_edge(1, v);
    return g;
}

Graph Graph::parse(const std::string& spec_in) {
    std::string spec;
    for (char c : spec_in)
        if (!std::isspace(static_cast<unsigned char>(c))) spec.push_back(c);
    if (spec.rfind("disjoint:", 0) == 0) {
        const std::string rest = spec.substr(9);
        const std::size_t xpos = rest.rfind('x');
        if (xpos == std::string::npos || xpos + 1 >= rest.size())
            throw InputError("graph spec: disjoint:<spec>x<count>");
        const unsigned copies = parse_uint(rest.substr(xpos + 1));
        if (copies == 0) throw InputError("graph spec: zero copies");
        Graph unit = parse(rest.substr(0, xpos));
        Graph g = unit;
        for (unsigned i = 1; i < copies; ++i) g = g.disjoint_union(unit);
        return g;
    }
    for (auto [name, maker] :
         {std::pair<const char*, Graph (*)(unsigned)>{"path:", &Graph::path},
          {"cycle:", &Graph::cycle},
          {"complete:", &Graph::complete},
          {"star:", &Graph::star}}) {
        if (spec.rfind(name, 0) == 0)
            return maker(parse_uint(spec.substr(std::string(name).size())));
    }
    // literal: n=5;edges=1-2,2-3
    if (spec.rfind("n=", 0) != 0)
        throw InputError("graph spec: expected named constructor or 'n=..;edges=..'");
    const std::size_t semi = spec.find(';');
    Graph g(parse_uint(spec.substr(2, semi == std::string::npos ? std::string::npos : semi - 2)));
    if (semi == std::string::npos) return g;
    std::string edges = spec.substr(semi + 1);
    if (edges.rfind("edges=", 0) != 0)
        throw InputError("graph spec: expected 'edges=' after ';'");
    edges = edges.substr(6);
    std::stringstream ss(edges);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const std::size_t dash = item.find('-');
        if (dash == std::string::npos)
            throw InputError("graph spec: edge must look like 1-2");
        g.add_edge(parse_uint(item.substr(0, dash)), parse_uint(item.substr(dash + 1)));
    }
    return g;
}

void Graph::add_edge(unsigned u, unsigned v) {
    if (u == 0 || v == 0 || u > n_ || v > n_)
        throw InputError("graph: vertex index out of range");
    if (u == v) throw InputError("graph: loops are not allowed");
    adj_[u - 1] |= (std::uint32_t{1} << (v - 1));
    adj_[v - 1] |= (std::uint32_t{1} << (u - 1));
}

bool Graph::has_edge(unsigned u, unsigned v) const {
    return (adj_[u - 1] >> (v - 1)) & 1u;
}

unsigned Graph::degree(unsigned v) const {
    return static_cast<unsigned>(std::popcount(adj_[v - 1]));
}

std::vector<std::pair<unsigned, unsigned>> Graph::edges() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned u = 1; u <= n_; ++u)
        for (unsigned v = u + 1; v <= n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

Graph Graph::complement() const {
    Graph g(n_);
    for (unsigned u = 1; u <= n_; ++u)
        for (unsigned v = u + 1; v <= n_; ++v)
            if (!has_edge(u, v)) g.add_edge(u, v);
    return g;
}

Graph Graph::disjoint_union(const Graph& o) const {
    Graph g(n_ + o.n_);
    for (auto [u, v] : edges()) g.add_edge(u, v);
    for (auto [u, v] : o.edges()) g.add_edge(u + n_, v + n_);
    return g;
}

std::string Graph::to_text() const {
    std::ostringstream os;
    os << "n=" << n_ << "; edges=";
    bool first = true;
    for (auto [u, v] : edges()) {
        if (!first) os << ",";
        first = false;
        os << u << "-" << v;
    }
    return os.str();
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges()) {
        std::vector<unsigned> e(g.vertices(), 0);
        e[u - 1] = 1;
        e[v - 1] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(g.vertices(), std::move(gens),
                               MonomialIdeal::DegreePolicy::Silent);
}

bool is_claw_free(const Graph& g) {
    const unsigned n = g.vertices();
    for (unsigned v = 1; v <= n; ++v) {
        std::vector<unsigned> nb;
        for (unsigned u = 1; u <= n; ++u)
            if (u != v && g.has_edge(u, v)) nb.push_back(u);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                for (std::size_t c = b + 1; c < nb.size(); ++c)
                    if (!g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c]))
                        return false; // induced K_{1,3}
            }
    }
    return true;
}

bool is_chordal(const Graph& g) {
    const unsigned n = g.vertices();
    // Maximum-cardinality search: assign numbers n..1.
    std::vector<unsigned> number(n + 1, 0), weight(n + 1, 0);
    for (unsigned step = n; step >= 1; --step) {
        unsigned pick = 0;
        for (unsigned v = 1; v <= n; ++v)
            if (number[v] == 0 && (pick == 0 || weight[v] > weight[pick])) pick = v;
        number[pick] = step;
        for (unsigned u = 1; u <= n; ++u)
            if (number[u] == 0 && g.has_edge(u, pick)) ++weight[u];
    }
    // Verify the elimination order (increasing number) is perfect.
    for (unsigned v = 1; v <= n; ++v) {
        unsigned parent = 0;
        for (unsigned u = 1; u <= n; ++u)
            if (g.has_edge(u, v) && number[u] > number[v] &&
                (parent == 0 || number[u] < number[parent]))
                parent = u;
        if (parent == 0) continue;
        for (unsigned u = 1; u <= n; ++u) {
            if (u == parent || !g.has_edge(u, v) || number[u] <= number[v]) continue;
            if (!g.has_edge(u, parent)) return false;
        }
    }
    return true;
}

bool complement_is_chordal(const Graph& g) { return is_chordal(g.complement()); }

namespace {

// f-polynomial of the independence complex of the subgraph induced on `mask`,
// via f(G) = f(G - v) + z f(G - N[v]), splitting into connected components
// first.  Vertex masks are over the original graph.
IntPolynomial independence_rec(const Graph& g, std::uint32_t mask) {
    if (mask == 0) return IntPolynomial::constant(1);
    // component split
    std::uint32_t comp = 0;
    {
        std::uint32_t frontier = mask & (~mask + 1); // lowest set bit
        comp = frontier;
        while (frontier) {
            std::uint32_t next = 0;
            for (unsigned v = 0; v < g.vertices(); ++v)
                if (frontier & (std::uint32_t{1} << v))
                    next |= g.neighbors_mask(v + 1) & mask & ~comp;
            comp |= next;
            frontier = next;
        }
    }
    if (comp != mask)
        return independence_rec(g, comp) * independence_rec(g, mask & ~comp);
    // pick a max-degree vertex within the component
    unsigned pick = 0;
    int best = -1;
    for (unsigned v = 0; v < g.vertices(); ++v) {
        if (!(mask & (std::uint32_t{1} << v))) continue;
        const int deg = std::popcount(g.neighbors_mask(v + 1) & mask);
        if (deg > best) {
            best = deg;
            pick = v;
        }
    }
    const std::uint32_t bit = std::uint32_t{1} << pick;
    const std::uint32_t closed = bit | (g.neighbors_mask(pick + 1) & mask);
    IntPolynomial with = independence_rec(g, mask & ~closed) * IntPolynomial{Int(0), Int(1)};
    return independence_rec(g, mask & ~bit) + with;
}

} // namespace

FPolynomial independence_f_polynomial(const Graph& g, unsigned vertex_cap) {
    if (g.vertices() > vertex_cap)
        throw TooManyVertices("independence_f_polynomial: graph exceeds the vertex cap of " +
                              std::to_string(vertex_cap));
    const std::uint32_t full =
        g.vertices() == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << g.vertices()) - 1);
    return independence_rec(g, full);
}

unsigned independence_number(const Graph& g, unsigned vertex_cap) {
    return static_cast<unsigned>(independence_f_polynomial(g, vertex_cap).degree());
}

IntPolynomial f_to_h(const IntPolynomial& f, unsigned d) {
    if (static_cast<int>(d) < f.degree())
        throw DegreeMismatch("f_to_h: d below the degree of f");
    // h(z) = sum_i f_i z^i (1-z)^(d-i)
    const IntPolynomial one_minus_z{Int(1), Int(-1)};
    IntPolynomial h;
    for (int i = 0; i <= f.degree(); ++i)
        h = h + IntPolynomial::term(f.coeff(static_cast<std::size_t>(i)),
                                    static_cast<std::size_t>(i)) *
                    one_minus_z.pow(d - static_cast<unsigned>(i));
    return h;
}

namespace {

ClosedFormRoot trig_root(unsigned numerator, unsigned denominator) {
    const Real pi = boost::math::constants::pi<Real>();
    const Real angle = pi * Real(numerator) / Real(denominator);
    ClosedFormRoot root;
    root.value = Real(-1) / (2 * (1 + cos(angle)));
    std::ostringstream os;
    os << "-1/(2*(1+cos(" << numerator << "*pi/" << denominator << ")))";
    root.expression = os.str();
    return root;
}

} // namespace

ClosedFormRoot cycle_root(unsigned n, unsigned s) {
    if (n < 3) throw IndexOutOfRange("cycle_root: n >= 3 required");
    if (s < 1 || s > n / 2) throw IndexOutOfRange("cycle_root: s out of range");
    return trig_root(2 * s - 1, n);
}

ClosedFormRoot path_root(unsigned n, unsigned s) {
    if (n < 1) throw IndexOutOfRange("path_root: n >= 1 required");
    if (s < 1 || s > (n + 1) / 2) throw IndexOutOfRange("path_root: s out of range");
    return trig_root(2 * s, n + 2);
}

namespace {

std::vector<std::complex<double>> aberth(const std::vector<double>& coeffs) {
    // coeffs[i] is the coefficient of z^i; leading coefficient nonzero.
    const std::size_t deg = coeffs.size() - 1;
    std::vector<std::complex<double>> z(deg);
    double radius = 0;
    for (std::size_t i = 0; i < deg; ++i)
        radius = std::max(radius, std::abs(coeffs[i] / coeffs[deg]));
    radius = 1 + radius;
    for (std::size_t k = 0; k < deg; ++k) {
        const double angle = 2 * 3.14159265358979323846 * (static_cast<double>(k) + 0.25) /
                             static_cast<double>(deg);
        z[k] = std::polar(radius * 0.7, angle);
    }
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (std::size_t k = 0; k < deg; ++k) {
            std::complex<double> f = 0, df = 0;
            for (std::size_t i = coeffs.size(); i-- > 0;) {
                df = df * z[k] + f;
                f = f * z[k] + coeffs[i];
            }
            std::complex<double> w;
            if (df == std::complex<double>(0, 0)) {
                w = std::complex<double>(1e-8, 1e-8);
            } else {
                const std::complex<double> newton = f / df;
                std::complex<double> sum = 0;
                for (std::size_t j = 0; j < deg; ++j)
                    if (j != k) sum += 1.0 / (z[k] - z[j]);
                w = newton / (1.0 - newton * sum);
            }
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / (1 + std::abs(z[k])));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

double residual_of(const std::vector<double>& coeffs, std::complex<double> z) {
    std::complex<double> f = 0;
    double scale = 0;
    double zpow = 1;
    for (std::size_t i = coeffs.size(); i-- > 0;) f = f * z + coeffs[i];
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        scale += std::abs(coeffs[i]) * zpow;
        zpow *= std::abs(z);
    }
    return std::abs(f) / (scale > 0 ? scale : 1.0);
}

} // namespace

std::vector<NumericRoot> complex_roots(const IntPolynomial& p) {
    std::vector<NumericRoot> out;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        std::vector<double> c(factor.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = factor.coeffs()[i].convert_to<double>();
        for (const auto& z : aberth(c))
            out.push_back(NumericRoot{z, multiplicity, residual_of(c, z)});
    }
    std::sort(out.begin(), out.end(), [](const NumericRoot& a, const NumericRoot& b) {
        return std::abs(a.value) < std::abs(b.value);
    });
    return out;
}

ProbeReport question58_probe(unsigned n_max, double tie_rel_tol) {
    if (n_max > 7)
        throw TooManyVertices("question58_probe: sweep limited to 7 vertices");
    ProbeReport report;
    report.max_vertices = n_max;
    report.tie_rel_tol = tie_rel_tol;
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<std::pair<unsigned, unsigned>> slots;
        for (unsigned u = 1; u <= n; ++u)
            for (unsigned v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
        const std::uint64_t total = std::uint64_t{1} << slots.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g(n);
            for (std::size_t b = 0; b < slots.size(); ++b)
                if (mask & (std::uint64_t{1} << b)) g.add_edge(slots[b].first, slots[b].second);
            ++report.graphs_scanned;

            const IntPolynomial f = independence_f_polynomial(g);
            const IntPolynomial h = f_to_h(f, static_cast<unsigned>(f.degree()));

            if (is_claw_free(g)) {
                ++report.clawfree_checked;
                if (h.degree() < 1 || all_roots_real(h))
                    ++report.clawfree_all_real;
                else
                    report.clawfree_violations.push_back(g.to_text());
            }

            if (h.degree() < 1) continue;
            ++report.with_roots;
            const auto roots = complex_roots(h);
            const double min_mod = std::abs(roots.front().value);
            std::vector<std::complex<double>> tied;
            for (const auto& r : roots) {
                if (r.residual > 1e-8) ++report.residual_failures;
                if (std::abs(r.value) <= min_mod * (1 + tie_rel_tol))
                    tied.push_back(r.value);
            }
            if (tied.size() > 1) {
                report.ties.push_back(
                    ProbeFinding{g.to_text(), h.to_string(), tied, min_mod});
            } else {
                const auto& z = roots.front().value;
                if (std::abs(z.imag()) <= 1e-9 * (1 + std::abs(z.real())) && z.real() < 0)
                    ++report.min_root_real_negative;
            }
        }
    }
    return report;
}

std::string ProbeReport::to_text() const {
    std::ostringstream os;
    os << "question 5.8 probe: all graphs on <= " << max_vertices << " vertices\n"
       << "  graphs scanned:            " << graphs_scanned << "\n"
       << "  with nonconstant h:        " << with_roots << "\n"
       << "  unique min root, real < 0: " << min_root_real_negative << "\n"
       << "  min-modulus ties flagged:  " << ties.size() << " (tolerance "
       << tie_rel_tol << ", flagged for exact re-examination)\n"
       << "  claw-free checked:         " << clawfree_checked << "\n"
       << "  claw-free with all-real h: " << clawfree_all_real << "\n"
       << "  claw-free violations:      " << clawfree_violations.size() << "\n"
       << "  residual check failures:   " << residual_failures << "\n";
    for (const auto& t : ties) {
        os << "  tie: " << t.graph << "  h = " << t.h << "  |root| = " << t.min_modulus
           << "  roots:";
        for (const auto& z : t.tied_roots) os << " (" << z.real() << "," << z.imag() << ")";
        os << "\n";
    }
    for (const auto& v : clawfree_violations) os << "  claw-free violation: " << v << "\n";
    os << "evidence only; no assertion about the open question is made\n";
    return os.str();
}

nlohmann::json ProbeReport::to_json() const {
    nlohmann::json ties_json = nlohmann::json::array();
    for (const auto& t : ties) {
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& z : t.tied_roots) roots.push_back({z.real(), z.imag()});
        ties_json.push_back(nlohmann::json{{"graph", t.graph},
                                           {"h", t.h},
                                           {"min_modulus", t.min_modulus},
                                           {"roots", roots}});
    }
    return nlohmann::json{{"max_vertices", max_vertices},
                          {"tie_rel_tol", tie_rel_tol},
                          {"graphs_scanned", graphs_scanned},
                          {"with_roots", with_roots},
                          {"min_root_real_negative", min_root_real_negative},
                          {"clawfree_checked", clawfree_checked},
                          {"clawfree_all_real", clawfree_all_real},
                          {"clawfree_violations", clawfree_violations},
                          {"residual_failures", residual_failures},
                          {"ties", ties_json}};
}

} // namespace gradedev
