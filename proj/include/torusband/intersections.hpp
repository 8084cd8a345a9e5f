#pragma once

#include <cstdint>
#include <vector>

#include "torusband/walks.hpp"

namespace tb {

struct subsequence_witness {
    std::int64_t shift{0};    // l, a multiple of n
    std::int64_t start{0};    // index of the leading nonzero of the run
    std::int64_t zero_run{0}; // number of interior zeros
    int sign{1};

    friend bool operator==(const subsequence_witness&, const subsequence_witness&) = default;
};

struct triple_witness {
    std::int64_t x{0};
    std::int64_t y{0};
    std::int64_t q{0}; // 0 <= q <= |m_x - m'_y| - 2

    friend bool operator==(const triple_witness&, const triple_witness&) = default;
};

struct intersection_report {
    std::int64_t count{0};
    std::vector<subsequence_witness> subsequences;
    std::vector<triple_witness> triples;
};

enum class exec_policy { serial, parallel };

/// Geometric intersection number of two non-homotopic primitive CVb loops by
/// the difference-sequence combinatorics.  Throws homotopic_inputs.
intersection_report intersections_cvb(const loop_matrix& a, const loop_matrix& b,
                                      exec_policy policy = exec_policy::parallel);

/// Self-intersection count of a primitive CVb loop; each crossing counted once.
intersection_report self_intersections(const loop_matrix& a,
                                       exec_policy policy = exec_policy::parallel);

/// A crossing between two walks, with the data needed for Dehn twisting:
/// position on each walk (letter index before which the other curve passes),
/// relative orientation, and the local crossing sign.
struct walk_crossing {
    std::int64_t pos_w{0};     // insertion position on the first walk
    std::int64_t pos_delta{0}; // matching visit position on the second walk
    bool reversed{false};      // anti-parallel overlap (case a) or orientation
    int sign{1};               // crossing sign of (first, second)
    bool vertex_case{false};   // true for single-vertex (case b) crossings
};

/// All crossings of two reduced, primitive, non-equivalent walks.
std::vector<walk_crossing> walk_crossings(const cyclic_walk& a, const cyclic_walk& b);

/// Intersection number via the common-subword / vertex-crossing criterion.
intersection_report intersections_general(const cyclic_walk& a, const cyclic_walk& b);

/// Self-intersection count of a reduced primitive walk.
std::int64_t self_intersections_general(const cyclic_walk& w);

enum class spherical_class { spherical, not_simple, separating, not_primitive };

spherical_class classify_spherical(const cyclic_walk& w);

} // namespace tb
