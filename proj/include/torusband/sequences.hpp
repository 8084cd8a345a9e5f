#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torusband/walks.hpp"

namespace tb {

/// Partial sums S_0 = 0, S_{i+1} = S_i + d(i mod n); length n*r + 1.
std::vector<std::int64_t> partial_sums(int r, const std::vector<std::int64_t>& d);

/// Canonical cyclic sequence m(r, d): m_x = signed count of multiples of r in
/// the half-open interval between S_x and S_{x+1}.  Throws not_coprime.
loop_matrix canonical_sequence(int r, const std::vector<std::int64_t>& d);

/// Column entry multiset {q x a, (q+1) x (r-a)} with r*q + (r-a) = d_i; sorted.
std::vector<std::int64_t> degree_multiset(int r, std::int64_t di);

enum class t_range_mode { column, all };
enum class cond2_mode { column, literal };

struct pattern_witness {
    std::int64_t t{0};   // index shift of the compared rotation
    std::int64_t pos{0}; // start of the 1,0,...,0,1 (or negated) run
    std::int64_t run{0}; // number of interior zeros
    int sign{1};
};

struct simplicity_report {
    bool coprime_ok{true};
    bool column_gap_ok{true};
    bool pattern_ok{true};
    std::int64_t gcd_value{1};
    std::vector<int> gap_columns;          // columns violating condition (2)
    std::vector<pattern_witness> patterns; // witnesses violating condition (3)

    bool simple() const { return coprime_ok && column_gap_ok && pattern_ok; }
};

/// The three simplicity conditions: coprimality, entry gap, and the forbidden
/// 1,0,...,0,1 / -1,0,...,0,-1 difference patterns.
simplicity_report bdg_check(const loop_matrix& m,
                            t_range_mode t_range = t_range_mode::column,
                            cond2_mode cond2 = cond2_mode::column);

struct enumeration_limits {
    int n_max{3};
    int r_max{6};
    std::uint64_t candidate_cap{4'000'000};
};

/// Brute-force uniqueness check: all primitive sequences with the prescribed
/// column multisets passing bdg_check, grouped up to row rotation.  The
/// multidegree d must be normalized into [0, r)^n.  Throws search_too_large.
std::vector<loop_matrix> enumerate_simple_candidates(int n, int r,
                                                     const std::vector<std::int64_t>& d,
                                                     const enumeration_limits& limits = {},
                                                     bool parallel = true);

struct peel_result {
    std::vector<std::int64_t> line_degree; // the degree vector l, length n
    loop_matrix reduced;                   // rank r-1
};

/// One extension-peeling step at base row index i (default 0):
/// l_i = max(m_i, m_{i+n}) + 1, l_{i+j} = m_{i+j} for 0 < j < n; the reduced
/// sequence merges the two rows through column formula m_i - l_i + m_{i+n}.
/// Requires r >= 2.
peel_result extension_peel(const loop_matrix& m, int i = 0);

/// Iterate peeling down to rank 1; returns r degree vectors summing to the
/// multidegree of m.
std::vector<std::vector<std::int64_t>> peel_tower(const loop_matrix& m);

/// Straight-line representative in the fundamental rectangle [0,n] x [0,1].
/// Heights are exact integers scaled by r (marked point z_i^k sits at height
/// k/r on the vertical arc x = i).
struct planar_segment {
    int column{0};         // strip [column, column+1]
    std::int64_t y0{0};    // height * r at x = column, in [0, r)
    std::int64_t y1{0};    // height * r at x = column + 1 (unreduced: y0 + d(column))
};

struct planar_representative {
    int n{1};
    int r{1};
    std::vector<planar_segment> segments; // exactly n*r
};

planar_representative geometric_representative(int r, const std::vector<std::int64_t>& d);

/// Exact pairwise sweep over segment pairs and integer vertical shifts.
std::int64_t count_planar_crossings(const planar_representative& rep);

/// SVG 1.1 rendering; punctures drawn as open circles, segments as polylines
/// split at integer heights.
std::string render_svg(const planar_representative& rep);

} // namespace tb
