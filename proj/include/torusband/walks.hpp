#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "torusband/errors.hpp"

namespace tb {

/// A letter of the ribbon graph Gamma of the n-punctured torus.
/// eps_j runs from vertex v_j to v_{j+1}; kappa_j is a loop based at
/// v_{(j+1) mod n} (the head of eps_j), so that ... eps_j kappa_j^m eps_{j+1} ...
/// composes.
enum class letter_kind : std::uint8_t { eps, kappa };

struct letter {
    letter_kind kind{letter_kind::eps};
    int col{0};  // residue in Z_n
    int sign{1}; // +1 or -1

    friend bool operator==(const letter&, const letter&) = default;
    friend auto operator<=>(const letter& a, const letter& b) {
        return std::tie(a.kind, a.col, a.sign) <=> std::tie(b.kind, b.col, b.sign);
    }
};

inline letter inverse(letter l) { return {l.kind, l.col, -l.sign}; }

/// Source vertex index of a letter (in Z_n).
int letter_source(const letter& l, int n);
/// Target vertex index of a letter (in Z_n).
int letter_target(const letter& l, int n);

/// A reduced cyclic walk; letters are stored in the lexicographically least
/// rotation so equality is structural.
struct cyclic_walk {
    int n{1};
    std::vector<letter> letters;

    friend bool operator==(const cyclic_walk&, const cyclic_walk&) = default;
};

/// Cyclic integer sequence m in Z^{Z_{nr}}, row-major (row 0 first); entry at
/// index x belongs to column x mod n.
struct loop_matrix {
    int n{1};
    int r{1};
    std::vector<std::int64_t> entries; // length n*r

    std::int64_t at(std::int64_t x) const {
        std::int64_t len = static_cast<std::int64_t>(entries.size());
        return entries[static_cast<std::size_t>(((x % len) + len) % len)];
    }
    friend bool operator==(const loop_matrix&, const loop_matrix&) = default;
};

struct homology_class {
    std::int64_t rank{0};
    std::vector<std::int64_t> multidegree;
    std::int64_t total_degree{0};

    friend bool operator==(const homology_class&, const homology_class&) = default;
};

/// Cyclically reduce a composable raw word.  Throws not_composable /
/// contractible_loop.
cyclic_walk reduce_walk(std::vector<letter> raw, int n);

/// Free homotopy equality of unoriented loops: rotation or rotation of the
/// reversed-inverted word.
bool walks_equivalent(const cyclic_walk& a, const cyclic_walk& b);

/// True iff the cyclic word is not a proper power.
bool is_primitive(const cyclic_walk& w);

/// Monotone (vector-bundle) loops: no eps^{-1} letter and at least one eps.
bool is_cvb(const cyclic_walk& w);

loop_matrix matrix_from_walk(const cyclic_walk& w);
cyclic_walk walk_from_matrix(const loop_matrix& m);

homology_class homology_of(const cyclic_walk& w);
homology_class homology_of(const loop_matrix& m);

/// For a loop known to be simple: separating iff null-homologous.
bool is_non_separating(const cyclic_walk& w, bool simple);

/// Column contraction C^q: column q of the result is the entry-wise sum of
/// columns q and q+1; requires n >= 2 and 0 <= q <= n-2.
loop_matrix contract(const loop_matrix& m, int q);

/// Rotate the cyclic sequence by k rows (index shift by k*n).
loop_matrix rotate_rows(const loop_matrix& m, int k);

/// True iff the sequence is not periodic with period n*s for a proper divisor
/// s of r.
bool is_primitive(const loop_matrix& m);

/// Oriented/unoriented homotopy of CVb loops given as matrices: same n, r and
/// equal up to row rotation (the reversal of a CVb loop is never CVb).
bool matrices_equivalent(const loop_matrix& a, const loop_matrix& b);

/// The walk eps_0 eps_1 ... eps_{n-1}.
cyclic_walk gamma_pic(int n);
/// The walk kappa_i.
cyclic_walk kappa_loop(int n, int i);

} // namespace tb
