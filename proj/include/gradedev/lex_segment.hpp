#pragma once

#include "gradedev/hilbert.hpp"
#include "gradedev/monomial_ideal.hpp"

#include <optional>

namespace gradedev {

struct LexSegmentResult {
    MonomialIdeal ideal;
    unsigned bound = 0; ///< degree D the construction ran to
    /// Exact certificate: the generated ideal reproduces the full Hilbert
    /// series of the input (rational-function equality), hence nothing is
    /// missing beyond the bound.
    bool complete = false;
    /// Heuristic flag: a new generator appeared in degree D or D-1.
    bool new_generator_near_bound = false;
};

/// Default construction bound: max(2 * maxdeg, n + maxdeg).
unsigned default_lex_bound(const MonomialIdeal& ideal);

/// Degreewise lex-segment ideal of I under T_1 > T_2 > ... > T_n.  For each
/// d <= D the ideal's degree-d piece is replaced by the lex-first span of the
/// same dimension; minimal generators are collected as L_d minus n*L_{d-1}.
/// Throws MacaulayViolation if n*L_{d-1} is not contained in L_d, or if the
/// collected generators fail to reproduce the target Hilbert function up to D.
LexSegmentResult lex_segment(const MonomialIdeal& ideal,
                             std::optional<unsigned> max_degree = std::nullopt);

/// lex_segment with automatic bound extension until the exact Hilbert-series
/// certificate holds (at most a few doublings).
LexSegmentResult lex_segment_certified(const MonomialIdeal& ideal);

bool is_stable(const MonomialIdeal& ideal);
bool is_strongly_stable(const MonomialIdeal& ideal);
bool is_lex(const MonomialIdeal& ideal);
bool is_complete_intersection(const MonomialIdeal& ideal);

} // namespace gradedev
