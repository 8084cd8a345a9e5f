#pragma once

#include <cstdint>
#include <vector>

#include "torusband/intersections.hpp"
#include "torusband/walks.hpp"

namespace tb {

/// Humphries generator word; vert(i) is the twist along kappa_i, pic the
/// twist along gamma_Pic.
struct twist_step {
    enum class generator : std::uint8_t { pic, vert };
    generator gen{generator::pic};
    int col{0}; // for vert
    std::int64_t power{1};

    friend bool operator==(const twist_step&, const twist_step&) = default;
};

using twist_word = std::vector<twist_step>;

/// Sequence-level vertical twist: adds l to every entry of column i.
loop_matrix twist_vertical(const loop_matrix& m, int i, std::int64_t l);

/// Combinatorial Dehn twist along a simple loop delta: insert a based copy of
/// delta^{sign} at every crossing, then reduce.  power must be +1 or -1;
/// higher powers by iteration.  Throws not_simple_twist_curve.
cyclic_walk twist_general(const cyclic_walk& w, const cyclic_walk& delta, int power);

cyclic_walk apply_twist_step(const cyclic_walk& w, const twist_step& s);
cyclic_walk apply_twist_word(const cyclic_walk& w, const twist_word& word);

/// Euclid on (r, total degree) realized by twists; returns a word carrying w
/// to a walk equivalent to gamma_Pic.  Throws not_spherical.
twist_word normalize_to_pic(const cyclic_walk& w);

/// <(r,d),(r',d')> = r d' - d r'.
std::int64_t homology_pairing(const homology_class& a, const homology_class& b);

} // namespace tb
