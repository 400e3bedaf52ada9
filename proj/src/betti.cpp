#include "gradedev/betti.hpp"

#include "gradedev/errors.hpp"
#include "gradedev/lex_segment.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gradedev {

LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap) {
    std::set<std::vector<unsigned>> elements;
    elements.insert(std::vector<unsigned>(ideal.vars(), 0));
    // Closure under joins: fold each generator into the set built so far.
    for (const auto& g : ideal.gens()) {
        std::set<std::vector<unsigned>> next = elements;
        for (const auto& e : elements) {
            Monomial joined = Monomial::lcm(Monomial{e}, g);
            next.insert(joined.exponents);
        }
        if (next.size() > cap)
            throw LatticeTooLarge("lcm lattice exceeds cap of " + std::to_string(cap));
        elements = std::move(next);
    }
    LcmLattice lattice;
    lattice.elements.assign(elements.begin(), elements.end());
    return lattice;
}

std::uint64_t BettiTable::entry(unsigned i, unsigned j) const {
    auto it = graded_.find({i, j});
    return it == graded_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(unsigned i) const {
    std::uint64_t sum = 0;
    for (const auto& [key, value] : graded_)
        if (key.first == i) sum += value;
    return sum;
}

std::vector<std::uint64_t> BettiTable::totals() const {
    std::vector<std::uint64_t> out(projective_dimension() + 1, 0);
    for (const auto& [key, value] : graded_) out[key.first] += value;
    return out;
}

unsigned BettiTable::projective_dimension() const {
    unsigned pd = 0;
    for (const auto& [key, value] : graded_)
        if (value > 0) pd = std::max(pd, key.first);
    return pd;
}

unsigned BettiTable::max_internal_degree() const {
    unsigned d = 0;
    for (const auto& [key, value] : graded_)
        if (value > 0) d = std::max(d, key.second);
    return d;
}

void BettiTable::add(unsigned i, unsigned j, std::uint64_t count) {
    if (count == 0) return;
    graded_[{i, j}] += count;
}

void BettiTable::add_multigraded(unsigned i, std::vector<unsigned> multidegree,
                                 std::uint64_t count) {
    if (count == 0) return;
    Monomial m{multidegree};
    graded_[{i, m.degree()}] += count;
    multigraded_[{i, std::move(multidegree)}] += count;
}

IntPolynomial BettiTable::alternating_sum() const {
    IntPolynomial p;
    for (const auto& [key, value] : graded_) {
        IntPolynomial term = IntPolynomial::term(Int(value), key.second);
        p = (key.first % 2 == 0) ? p + term : p - term;
    }
    return p;
}

std::string BettiTable::to_text() const {
    const unsigned pd = projective_dimension();
    // Rows indexed by j - i as in Macaulay2.
    int max_row = 0;
    for (const auto& [key, value] : graded_)
        if (value > 0)
            max_row = std::max(max_row, static_cast<int>(key.second) -
                                            static_cast<int>(key.first));
    std::vector<std::string> header{"total:"};
    std::ostringstream os;
    os << "      ";
    for (unsigned i = 0; i <= pd; ++i) os << " " << i;
    os << "\n";
    os << "total:";
    for (unsigned i = 0; i <= pd; ++i) os << " " << total(i);
    os << "\n";
    for (int row = 0; row <= max_row; ++row) {
        os << std::string(5 - std::to_string(row).size(), ' ') << row << ":";
        for (unsigned i = 0; i <= pd; ++i) {
            const std::uint64_t b = entry(i, static_cast<unsigned>(row) + i);
            if (b == 0)
                os << " .";
            else
                os << " " << b;
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json BettiTable::to_json() const {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [key, value] : graded_)
        obj[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
    return obj;
}

std::size_t integer_matrix_rank(std::vector<std::vector<Int>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

namespace {

// Strand of the Koszul complex of S/I in one multidegree: basis of position i
// is the set of subsets F of supp(a), |F| = i, with x^(a - 1_F) not in I.
struct Strand {
    std::vector<unsigned> support_vars;      // 0-based variable indices with a_i >= 1
    std::vector<std::vector<std::uint32_t>> basis; // by homological degree, subset masks
    std::vector<bool> monomial_in_ideal;     // indexed by subset mask
};

Strand build_strand(const MonomialIdeal& ideal, const std::vector<unsigned>& a) {
    Strand strand;
    for (unsigned v = 0; v < a.size(); ++v)
        if (a[v] >= 1) strand.support_vars.push_back(v);
    const std::size_t s = strand.support_vars.size();
    strand.monomial_in_ideal.assign(std::size_t{1} << s, false);
    strand.basis.assign(s + 1, {});
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask) {
        Monomial m{a};
        for (std::size_t b = 0; b < s; ++b)
            if (mask & (std::uint32_t{1} << b)) m.exponents[strand.support_vars[b]] -= 1;
        strand.monomial_in_ideal[mask] = ideal.contains(m);
        if (!strand.monomial_in_ideal[mask])
            strand.basis[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    }
    return strand;
}

std::vector<std::vector<Int>> strand_differential(const Strand& strand, std::size_t i) {
    // d_i : C_i -> C_{i-1}
    const auto& domain = strand.basis[i];
    const auto& target = strand.basis[i - 1];
    if (domain.empty() || target.empty()) return {};
    std::map<std::uint32_t, std::size_t> index_of;
    for (std::size_t t = 0; t < target.size(); ++t) index_of[target[t]] = t;
    std::vector<std::vector<Int>> m(target.size(), std::vector<Int>(domain.size(), Int(0)));
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const std::uint32_t mask = domain[c];
        int position = 0;
        for (std::size_t b = 0; b < strand.support_vars.size(); ++b) {
            const std::uint32_t bit = std::uint32_t{1} << b;
            if (!(mask & bit)) continue;
            const std::uint32_t sub = mask ^ bit;
            if (!strand.monomial_in_ideal[sub])
                m[index_of.at(sub)][c] = (position % 2 == 0) ? 1 : -1;
            ++position;
        }
    }
    return m;
}

} // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const BettiCaps& caps) {
    if (ideal.vars() > caps.max_vars)
        throw LatticeTooLarge("betti_table: more than " + std::to_string(caps.max_vars) +
                              " variables (raise the cap to proceed)");
    if (ideal.num_gens() > caps.max_gens)
        throw LatticeTooLarge("betti_table: more than " + std::to_string(caps.max_gens) +
                              " generators (raise the cap to proceed)");
    BettiTable table(ideal.vars());
    table.add_multigraded(0, std::vector<unsigned>(ideal.vars(), 0), 1);
    const LcmLattice lattice = lcm_lattice(ideal, caps.lattice_cap);
    for (const auto& a : lattice.elements) {
        if (std::all_of(a.begin(), a.end(), [](unsigned e) { return e == 0; })) continue;
        const Strand strand = build_strand(ideal, a);
        const std::size_t s = strand.support_vars.size();
        std::vector<std::size_t> ranks(s + 2, 0); // rank of d_i, index i
        for (std::size_t i = 1; i <= s; ++i) {
            auto m = strand_differential(strand, i);
            ranks[i] = integer_matrix_rank(std::move(m));
        }
        for (std::size_t i = 1; i <= s; ++i) {
            const std::size_t dim = strand.basis[i].size();
            const std::size_t homology = dim - ranks[i] - ranks[i + 1];
            if (homology > 0)
                table.add_multigraded(static_cast<unsigned>(i), a,
                                      static_cast<std::uint64_t>(homology));
        }
    }
    return table;
}

BettiTable eliahou_kervaire(const MonomialIdeal& ideal) {
    if (!is_stable(ideal))
        throw NotStable("eliahou_kervaire: ideal is not stable");
    BettiTable table(ideal.vars());
    table.add(0, 0, 1);
    for (const auto& u : ideal.gens()) {
        const unsigned maxi = u.max_index();
        const unsigned d = u.degree();
        for (unsigned i = 0; i < maxi; ++i) {
            const Int b = binomial(Int(maxi) - 1, i);
            // beta_{i+1, d+i}(S/I) contribution
            table.add(i + 1, d + i, b.convert_to<std::uint64_t>());
        }
    }
    return table;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const BettiCaps& caps) {
    if (ideal.is_zero()) return true;
    const unsigned d = ideal.gens().front().degree();
    for (const auto& g : ideal.gens())
        if (g.degree() != d) return false;
    const BettiTable table = betti_table(ideal, caps);
    for (const auto& [key, value] : table.graded()) {
        if (value == 0 || key.first == 0) continue;
        if (key.second != d + key.first - 1) return false;
    }
    return true;
}

std::string GolodCertificate::to_string() const {
    switch (status) {
        case GolodStatus::StronglyStable: return "StronglyStable";
        case GolodStatus::LinearResolution: return "LinearResolution";
        case GolodStatus::Principal: return "Principal";
        case GolodStatus::Unknown: return "Unknown";
    }
    return "Unknown";
}

GolodCertificate golod_certificate(const MonomialIdeal& ideal, const BettiCaps& caps) {
    if (is_strongly_stable(ideal)) return {GolodStatus::StronglyStable};
    if (has_linear_resolution(ideal, caps)) return {GolodStatus::LinearResolution};
    if (ideal.num_gens() == 1) return {GolodStatus::Principal};
    return {GolodStatus::Unknown};
}

} // namespace gradedev
