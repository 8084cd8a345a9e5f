#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "torusband/fp.hpp"
#include "torusband/walks.hpp"

namespace tb {

// Quiver Q(n): three vertices per column i -- bottom B_i, middle M_i, top T_i
// -- and arrows a_i, c_i : B_i -> M_i, d_i : M_i -> T_i, b_i : M_i -> T_{i-1},
// subject to b_i a_i = 0 = d_i c_i.  The path basis of the quotient algebra
// has 9n elements: idempotents, arrows, and the composites d_i a_i, b_i c_i.

enum class vertex_type : std::uint8_t { bottom = 0, middle = 1, top = 2 };

inline int vertex_id(int col, vertex_type t, int n) {
    return 3 * (((col % n) + n) % n) + static_cast<int>(t);
}
inline int vertex_col(int v) { return v / 3; }
inline vertex_type vertex_kind(int v) { return static_cast<vertex_type>(v % 3); }

enum class path_kind : std::uint8_t { idem, a, b, c, d, da, bc };

struct path {
    path_kind kind{path_kind::idem};
    int col{0};         // column of the arrow(s); for idem, unused
    int idem_vertex{0}; // vertex id for idempotents

    friend bool operator==(const path&, const path&) = default;
    friend auto operator<=>(const path& x, const path& y) {
        return std::tie(x.kind, x.col, x.idem_vertex) <=> std::tie(y.kind, y.col, y.idem_vertex);
    }
};

int path_source(const path& p, int n);
int path_target(const path& p, int n);

/// Composition "first q, then p"; nullopt when the composite is zero in the
/// algebra (relations b_i a_i = d_i c_i = 0) or not composable.
std::optional<path> compose(const path& p, const path& q, int n);

/// All basis paths from vertex u to vertex v (dimension <= 2).
std::vector<path> basis_paths(int u, int v, int n);

/// F_p-linear combination of parallel basis paths.
using path_lin = std::vector<std::pair<path, std::int64_t>>;

path_lin lin_normalize(path_lin l);
path_lin lin_add(const path_lin& a, const path_lin& b);
path_lin lin_scale(const path_lin& a, std::int64_t c);
/// compose(p, q) extended bilinearly; "first q, then p".
path_lin lin_compose(const path_lin& p, const path_lin& q, int n);

struct summand {
    int vertex{0};
    int deg{0};

    friend bool operator==(const summand&, const summand&) = default;
};

/// Bounded complex of indecomposable projectives.  The differential entry
/// keyed (s, t) is the component from summand s to summand t; its label is a
/// linear combination of paths from vertex(t) to vertex(s) and raises the
/// cohomological degree by one.
struct projective_complex {
    int n{1};
    std::vector<summand> summands;
    std::map<std::pair<int, int>, path_lin> diff;

    int min_deg() const;
    int max_deg() const;
};

/// Verifies d.d = 0 through the relation table.
bool check_d2(const projective_complex& X);

projective_complex build_band_complex(const loop_matrix& m, std::int64_t lambda);
projective_complex build_picard(std::int64_t lambda, int n);
projective_complex build_skyscraper(int i, std::int64_t lambda, int n);

/// Gaussian elimination at idempotent entries; homotopy-equivalent minimal
/// model.
projective_complex minimize(projective_complex X);

bool is_minimal(const projective_complex& X);

struct chain_map {
    projective_complex X;
    projective_complex Y;
    int shift{0};
    // component keyed (u, w): from X-summand u to Y-summand w, a combination
    // of paths from vertex(w) to vertex(u); deg(w) = deg(u) + shift.
    std::map<std::pair<int, int>, path_lin> comps;
};

/// d_Y f = (-1)^s f d_X
bool commutes(const chain_map& f);

/// Standard cone [-d_X, 0; f, d_Y] of a shift-0 chain map, minimized.
/// Throws not_chain_map.
projective_complex cone(const chain_map& f);

/// Dimension of Hom(X, Y[s]) in the homotopy category, by exact linear
/// algebra over F_p.
std::int64_t hom_dim(const projective_complex& X, const projective_complex& Y, int s);
std::int64_t hom_total(const projective_complex& X, const projective_complex& Y);

/// A basis of shift-s chain maps spanning Hom(X, Y[s]) modulo homotopy
/// (coset representatives).
std::vector<chain_map> hom_basis(const projective_complex& X, const projective_complex& Y, int s);

/// Isomorphism of minimal complexes by canonical band/string-component forms;
/// the scalar-free variant ignores the local-system scalar.  Throws
/// not_minimal.
bool is_iso(const projective_complex& X, const projective_complex& Y);
bool is_iso_up_to_scalar(const projective_complex& X, const projective_complex& Y);

/// Canonical band scalar of a minimal one-band complex (the cycle holonomy in
/// its lexicographically least traversal); nullopt when the complex is not a
/// single band.
std::optional<std::int64_t> band_scalar(const projective_complex& X);

/// One extension-peel step realized in the homotopy category: the degree-0
/// morphism from the rank-1 band of the peel line degrees into the band of m
/// whose minimized cone is isomorphic (on the nose, with the matched local
/// scalar) to the band complex of the reduced sequence.  Throws not_chain_map
/// when the search fails.
struct extension_cone_result {
    std::vector<std::int64_t> line_degree;
    loop_matrix reduced;
    std::int64_t matched_lambda{1};   // scalar of the reduced band that matches
    projective_complex cone_complex;  // minimized cone of the found morphism
};

extension_cone_result extension_cone(const loop_matrix& m, std::int64_t lambda = 1);

std::int64_t dim_algebra(int n);
/// Independent brute-force path enumeration of (Q(n), R).
std::int64_t dim_algebra_brute_force(int n);

} // namespace tb
