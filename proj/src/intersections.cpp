#include "torusband/intersections.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tb {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

/// Subsequence witnesses of the difference sequence m - m'[l] over one period
/// L = n*lcm(r, r'), deduplicated by the index pair modulo each loop's own
/// period.  `self_mode` skips the identically-zero diagonal.
void scan_shift(const loop_matrix& a, const loop_matrix& b, std::int64_t l, std::int64_t L,
                std::set<std::pair<std::int64_t, std::int64_t>>& seen,
                std::vector<subsequence_witness>& out) {
    const std::int64_t na = static_cast<std::int64_t>(a.n) * a.r;
    const std::int64_t nb = static_cast<std::int64_t>(b.n) * b.r;
    std::vector<std::int64_t> diff(static_cast<std::size_t>(L));
    bool all_zero = true;
    for (std::int64_t x = 0; x < L; ++x) {
        diff[static_cast<std::size_t>(x)] = a.at(x) - b.at(x + l);
        all_zero = all_zero && diff[static_cast<std::size_t>(x)] == 0;
    }
    if (all_zero) return;
    for (std::int64_t x = 0; x < L; ++x) {
        const std::int64_t v = diff[static_cast<std::size_t>(x)];
        if (v == 0) continue;
        std::int64_t y = (x + 1) % L, zeros = 0;
        while (diff[static_cast<std::size_t>(y)] == 0) {
            y = (y + 1) % L;
            ++zeros;
        }
        const std::int64_t w = diff[static_cast<std::size_t>(y)];
        if ((v > 0) != (w > 0)) continue;
        const auto key = std::make_pair(x % na, (x + l) % nb);
        if (!seen.insert(key).second) continue;
        out.push_back({l, x, zeros, v > 0 ? 1 : -1});
    }
}

void collect_triples(const loop_matrix& a, const loop_matrix& b,
                     std::vector<triple_witness>& out, bool self_mode) {
    const std::int64_t na = static_cast<std::int64_t>(a.n) * a.r;
    const std::int64_t nb = static_cast<std::int64_t>(b.n) * b.r;
    for (std::int64_t x = 0; x < na; ++x) {
        for (std::int64_t y = (x % a.n); y < nb; y += a.n) {
            if (self_mode && x == y) continue;
            const std::int64_t gap = std::llabs(a.at(x) - b.at(y));
            for (std::int64_t q = 0; q + 2 <= gap; ++q) out.push_back({x, y, q});
        }
    }
}

intersection_report pair_or_self(const loop_matrix& a, const loop_matrix& b, bool self_mode,
                                 exec_policy policy) {
    const std::int64_t lc = lcm64(a.r, b.r);
    const std::int64_t L = static_cast<std::int64_t>(a.n) * lc;

    std::vector<std::vector<subsequence_witness>> per_shift(static_cast<std::size_t>(lc));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (policy == exec_policy::parallel)
#endif
    for (std::int64_t k = 0; k < lc; ++k) {
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        scan_shift(a, b, k * a.n, L, seen, per_shift[static_cast<std::size_t>(k)]);
    }
    (void)policy;

    intersection_report rep;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (auto& bucket : per_shift)
        for (auto& w : bucket) {
            const std::int64_t na = static_cast<std::int64_t>(a.n) * a.r;
            const std::int64_t nb = static_cast<std::int64_t>(b.n) * b.r;
            if (seen.insert({w.start % na, (w.start + w.shift) % nb}).second)
                rep.subsequences.push_back(w);
        }
    collect_triples(a, b, rep.triples, self_mode);

    std::int64_t total =
        static_cast<std::int64_t>(rep.subsequences.size() + rep.triples.size());
    if (self_mode) total /= 2; // ordered enumeration counts each crossing twice
    rep.count = total;
    return rep;
}

} // namespace

intersection_report intersections_cvb(const loop_matrix& a, const loop_matrix& b,
                                      exec_policy policy) {
    if (a.n != b.n) throw domain_error("loop matrices live on different surfaces");
    if (!is_primitive(a) || !is_primitive(b)) throw domain_error("inputs must be primitive");
    if (matrices_equivalent(a, b)) throw homotopic_inputs();
    return pair_or_self(a, b, false, policy);
}

intersection_report self_intersections(const loop_matrix& a, exec_policy policy) {
    if (!is_primitive(a)) throw domain_error("input must be primitive");
    return pair_or_self(a, a, true, policy);
}

// ---------------------------------------------------------------------------
// General walks: crossings of minimal-position representatives correspond to
// (a) maximal common subwords with straddling flanks, both relative
// orientations, and (b) single-vertex passages with interleaved half-edges.
// ---------------------------------------------------------------------------

namespace {

/// Outgoing half-edge slots at vertex v_m, counter-clockwise:
///   [ eps_m, kappa_{m-1}, eps_{m-1}^{-1}, kappa_{m-1}^{-1} ].
/// A strand arriving via letter x occupies the slot of x^{-1}.
int slot_position(const letter& out_letter, int vertex, int n) {
    const int m = vertex;
    const letter table[4] = {
        {letter_kind::eps, m, 1},
        {letter_kind::kappa, ((m - 1) % n + n) % n, 1},
        {letter_kind::eps, ((m - 1) % n + n) % n, -1},
        {letter_kind::kappa, ((m - 1) % n + n) % n, -1},
    };
    for (int p = 0; p < 4; ++p)
        if (table[p] == out_letter) return p;
    throw domain_error("letter does not occupy a slot at this vertex");
}

/// +1 iff going counter-clockwise from a we meet b before c.
int orient3(int pa, int pb, int pc) {
    return ((pb - pa + 4) % 4) < ((pc - pa + 4) % 4) ? 1 : -1;
}

letter at(const std::vector<letter>& v, std::int64_t i) {
    const std::int64_t L = static_cast<std::int64_t>(v.size());
    return v[static_cast<std::size_t>(((i % L) + L) % L)];
}

std::vector<letter> reversed_inverse(const std::vector<letter>& v) {
    std::vector<letter> out;
    out.reserve(v.size());
    for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

struct alignment {
    std::int64_t i;  // start on V
    std::int64_t j;  // start on the (possibly reversed) W
    std::int64_t len;
    bool reversed;
    bool crossing;
    int sign; // meaningful when crossing
};

/// Maximal common-subword alignments of cyclic words V and W2 (W2 already in
/// the chosen relative orientation); crossing test per the straddle criterion.
std::vector<alignment> case_a_alignments(const cyclic_walk& a, const std::vector<letter>& V,
                                         const std::vector<letter>& W2, bool reversed,
                                         bool self_mode) {
    const std::int64_t LV = static_cast<std::int64_t>(V.size());
    const std::int64_t LW = static_cast<std::int64_t>(W2.size());
    const std::int64_t cap = lcm64(LV, LW);
    const int n = a.n;
    std::vector<alignment> out;
    for (std::int64_t i = 0; i < LV; ++i) {
        for (std::int64_t j = 0; j < LW; ++j) {
            if (self_mode && !reversed && i == j) continue;
            if (!(at(V, i) == at(W2, j))) continue;
            if (at(V, i - 1) == at(W2, j - 1)) continue; // not left-maximal
            std::int64_t len = 1;
            while (len < cap && at(V, i + len) == at(W2, j + len)) ++len;
            if (len >= cap) throw homotopic_inputs("fully periodic overlap");

            const letter c1 = at(V, i);
            const letter cl = at(V, i + len - 1);
            const letter u = at(V, i - 1), up = at(W2, j - 1);
            const letter v = at(V, i + len), vp = at(W2, j + len);
            const int ventry = letter_source(c1, n);
            const int vexit = letter_target(cl, n);
            const int s_in = orient3(slot_position(c1, ventry, n),
                                     slot_position(inverse(u), ventry, n),
                                     slot_position(inverse(up), ventry, n));
            const int s_out = orient3(slot_position(inverse(cl), vexit, n),
                                      slot_position(v, vexit, n),
                                      slot_position(vp, vexit, n));
            alignment al{i, j, len, reversed, s_in == s_out, 0};
            if (al.crossing) al.sign = reversed ? -s_in : s_in;
            out.push_back(al);
        }
    }
    return out;
}

struct visit {
    std::int64_t pos;
    int vertex;
    int slot_in;  // slot of the arriving letter's inverse
    int slot_out; // slot of the departing letter
};

std::vector<visit> visits_of(const cyclic_walk& w) {
    std::vector<visit> out;
    const std::int64_t L = static_cast<std::int64_t>(w.letters.size());
    for (std::int64_t p = 0; p < L; ++p) {
        const letter dep = at(w.letters, p);
        const letter arr = at(w.letters, p - 1);
        const int vx = letter_source(dep, w.n);
        out.push_back({p, vx, slot_position(inverse(arr), vx, w.n), slot_position(dep, vx, w.n)});
    }
    return out;
}

/// Case (b): four pairwise distinct slots interleaving in the cyclic order.
/// sign = +1 when the CCW order is (w_out, d_out, w_in, d_in).
bool vertex_crossing(const visit& vw, const visit& vd, int& sign) {
    if (vw.vertex != vd.vertex) return false;
    int s[4] = {vw.slot_out, vd.slot_out, vw.slot_in, vd.slot_in};
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
            if (s[x] == s[y]) return false;
    const int b = (s[1] - s[0] + 4) % 4;
    const int c = (s[2] - s[0] + 4) % 4;
    const int d = (s[3] - s[0] + 4) % 4;
    const bool interleaved = (b < c && c < d) || (d < c && c < b);
    if (!interleaved) return false;
    sign = (b < c && c < d) ? 1 : -1;
    return true;
}

} // namespace

std::vector<walk_crossing> walk_crossings(const cyclic_walk& a, const cyclic_walk& b) {
    if (a.n != b.n) throw domain_error("walks live on different surfaces");
    const std::int64_t LB = static_cast<std::int64_t>(b.letters.size());
    std::vector<walk_crossing> out;

    for (const alignment& al : case_a_alignments(a, a.letters, b.letters, false, false))
        if (al.crossing) out.push_back({al.i, al.j, false, al.sign, false});
    const auto bbar = reversed_inverse(b.letters);
    for (const alignment& al : case_a_alignments(a, a.letters, bbar, true, false))
        if (al.crossing) out.push_back({al.i, (LB - al.j) % LB, true, al.sign, false});

    const auto va = visits_of(a);
    const auto vb = visits_of(b);
    for (const visit& p : va)
        for (const visit& q : vb) {
            int sign = 0;
            if (vertex_crossing(p, q, sign)) out.push_back({p.pos, q.pos, false, sign, true});
        }
    return out;
}

intersection_report intersections_general(const cyclic_walk& a, const cyclic_walk& b) {
    if (a.n != b.n) throw domain_error("walks live on different surfaces");
    if (!is_primitive(a) || !is_primitive(b)) throw domain_error("inputs must be primitive");
    if (walks_equivalent(a, b)) throw homotopic_inputs();
    intersection_report rep;
    rep.count = static_cast<std::int64_t>(walk_crossings(a, b).size());
    return rep;
}

std::int64_t self_intersections_general(const cyclic_walk& w) {
    if (!is_primitive(w)) throw domain_error("input must be primitive");
    std::int64_t total = 0;
    for (const alignment& al : case_a_alignments(w, w.letters, w.letters, false, true))
        if (al.crossing) ++total;
    const auto wbar = reversed_inverse(w.letters);
    for (const alignment& al : case_a_alignments(w, w.letters, wbar, true, true))
        if (al.crossing) ++total;
    const auto vs = visits_of(w);
    for (std::size_t p = 0; p < vs.size(); ++p)
        for (std::size_t q = 0; q < vs.size(); ++q) {
            if (p == q) continue;
            int sign = 0;
            if (vertex_crossing(vs[p], vs[q], sign)) ++total;
        }
    if (total % 2 != 0) throw domain_error("internal: odd ordered self-crossing count");
    return total / 2;
}

spherical_class classify_spherical(const cyclic_walk& w) {
    if (!is_primitive(w)) return spherical_class::not_primitive;
    if (self_intersections_general(w) != 0) return spherical_class::not_simple;
    if (!is_non_separating(w, true)) return spherical_class::separating;
    return spherical_class::spherical;
}

} // namespace tb
