#include "torusband/twists.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "torusband/errors.hpp"
#include "torusband/sequences.hpp"

namespace tb {

std::int64_t homology_pairing(const homology_class& a, const homology_class& b) {
    return a.rank * b.total_degree - a.total_degree * b.rank;
}

loop_matrix twist_vertical(const loop_matrix& m, int i, std::int64_t l) {
    if (i < 0 || i >= m.n) throw domain_error("column index out of range");
    loop_matrix out = m;
    for (int j = 0; j < m.r; ++j) out.entries[static_cast<std::size_t>(j * m.n + i)] += l;
    return out;
}

namespace {

std::vector<letter> rotation_of(const std::vector<letter>& v, std::int64_t start) {
    const std::int64_t L = static_cast<std::int64_t>(v.size());
    std::vector<letter> out;
    out.reserve(v.size());
    for (std::int64_t k = 0; k < L; ++k)
        out.push_back(v[static_cast<std::size_t>(((start + k) % L + L) % L)]);
    return out;
}

std::vector<letter> inverse_word(const std::vector<letter>& v) {
    std::vector<letter> out;
    out.reserve(v.size());
    for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

} // namespace

cyclic_walk twist_general(const cyclic_walk& w, const cyclic_walk& delta, int power) {
    if (power != 1 && power != -1) throw domain_error("twist power must be +1 or -1");
    if (w.n != delta.n) throw domain_error("walks live on different surfaces");
    if (self_intersections_general(delta) != 0) throw not_simple_twist_curve();
    if (walks_equivalent(w, delta)) return w; // a curve is fixed by its own twist

    // pos -> inserted based loops, in a deterministic order.
    std::multimap<std::int64_t, std::vector<letter>> insertions;
    for (const walk_crossing& cr : walk_crossings(w, delta)) {
        std::vector<letter> copy = rotation_of(delta.letters, cr.pos_delta);
        if (cr.sign * power < 0) copy = inverse_word(copy);
        insertions.insert({cr.pos_w, std::move(copy)});
    }
    if (insertions.empty()) return w;

    std::vector<letter> out;
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(w.letters.size()); ++p) {
        auto [lo, hi] = insertions.equal_range(p);
        for (auto it = lo; it != hi; ++it)
            out.insert(out.end(), it->second.begin(), it->second.end());
        out.push_back(w.letters[static_cast<std::size_t>(p)]);
    }
    return reduce_walk(std::move(out), w.n);
}

cyclic_walk apply_twist_step(const cyclic_walk& w, const twist_step& s) {
    const cyclic_walk delta =
        s.gen == twist_step::generator::pic ? gamma_pic(w.n) : kappa_loop(w.n, s.col);
    cyclic_walk cur = w;
    const int unit = s.power >= 0 ? 1 : -1;
    for (std::int64_t k = 0; k < std::llabs(s.power); ++k) cur = twist_general(cur, delta, unit);
    return cur;
}

cyclic_walk apply_twist_word(const cyclic_walk& w, const twist_word& word) {
    cyclic_walk cur = w;
    for (const twist_step& s : word) cur = apply_twist_step(cur, s);
    return cur;
}

twist_word normalize_to_pic(const cyclic_walk& w) {
    if (classify_spherical(w) != spherical_class::spherical) throw not_spherical();

    twist_word word;
    cyclic_walk cur = w;
    auto apply = [&](twist_step s) {
        cur = apply_twist_step(cur, s);
        word.push_back(s);
    };

    // Euclid on (rank, multidegree), realized on the walk.  gcd(r, dbar) = 1
    // is a twist invariant.  A Pic twist only keeps the walk monotone when all
    // its crossings with gamma_Pic carry the same sign, which holds when every
    // column degree has been reduced to one common sign: nonnegative residues
    // pair with a positive Pic twist (rank r -> r - dbar), nonpositive ones
    // with a negative Pic twist (rank r -> r + |dbar|).  Monotone simple walks
    // are canonical per class, so homology bookkeeping then determines the
    // curve; each Pic step is verified against the canonical walk of the new
    // class and rolled back in favour of the other variant if it degenerates.
    auto undo = [&](std::size_t mark) {
        while (word.size() > mark) {
            const twist_step s = word.back();
            word.pop_back();
            cur = apply_twist_step(cur, {s.gen, s.col, -s.power});
        }
    };
    auto try_variant = [&](const homology_class& h, int dir) {
        const std::size_t mark = word.size();
        const std::int64_t r = h.rank;
        const std::int64_t pm = r > 0 ? r : -r;
        const std::int64_t s = (r > 0 ? 1 : -1) * dir;
        std::int64_t dbar = 0;
        for (std::size_t i = 0; i < h.multidegree.size(); ++i) {
            const std::int64_t t = s * (((s * h.multidegree[i]) % pm + pm) % pm);
            dbar += t;
            const std::int64_t l = (t - h.multidegree[i]) / r;
            if (l != 0) apply({twist_step::generator::vert, static_cast<int>(i), l});
        }
        if (s * dbar >= 2 * pm) {
            undo(mark);
            return false;
        }
        // Rank acts as r -> r - p*dbar; p = dir = sign(r)*sign(residues) both
        // shrinks |r| and keeps the inserted copies aligned with the walk.
        apply({twist_step::generator::pic, 0, dir});
        // Rank 0 cannot arise here: it would force dbar = +-r, contradicting
        // gcd(r, dbar) = 1 for |r| >= 2.
        const homology_class g = homology_of(cur);
        const std::int64_t r2 = g.rank < 0 ? -g.rank : g.rank;
        std::vector<std::int64_t> d2 = g.multidegree;
        if (g.rank < 0)
            for (auto& x : d2) x = -x;
        if (r2 == 0 || r2 >= pm ||
            !walks_equivalent(cur, walk_from_matrix(canonical_sequence(static_cast<int>(r2), d2)))) {
            undo(mark);
            return false;
        }
        return true;
    };
    // With five or more columns, single-sign residues can overshoot |dbar|
    // past 2|r| in both directions and the canonical descent stalls.  Fall
    // back to a bounded best-first search over actual walks, steered by word
    // length, across single Pic and vertical twists.
    auto search_fallback = [&]() {
        const cyclic_walk goal = gamma_pic(cur.n);
        std::vector<twist_step> gens{{twist_step::generator::pic, 0, 1},
                                     {twist_step::generator::pic, 0, -1}};
        for (int i = 0; i < cur.n; ++i) {
            gens.push_back({twist_step::generator::vert, i, 1});
            gens.push_back({twist_step::generator::vert, i, -1});
        }
        auto key_of = [](const cyclic_walk& w) {
            std::string a, b;
            for (const letter& l : w.letters) {
                a.push_back(static_cast<char>(l.kind == letter_kind::eps ? 'e' : 'k'));
                a.push_back(static_cast<char>('0' + l.col));
                a.push_back(static_cast<char>(l.sign > 0 ? '+' : '-'));
            }
            std::vector<letter> rev;
            for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
                rev.push_back(inverse(*it));
            const cyclic_walk wi = reduce_walk(std::move(rev), w.n);
            for (const letter& l : wi.letters) {
                b.push_back(static_cast<char>(l.kind == letter_kind::eps ? 'e' : 'k'));
                b.push_back(static_cast<char>('0' + l.col));
                b.push_back(static_cast<char>(l.sign > 0 ? '+' : '-'));
            }
            return a < b ? a : b;
        };
        struct node {
            cyclic_walk w;
            int parent;
            twist_step step;
        };
        std::vector<node> nodes{{cur, -1, {}}};
        std::set<std::string> seen{key_of(cur)};
        // (priority, node index); priority = word length, so short curves are
        // explored first and plateaus are crossed via the visited set.
        std::priority_queue<std::pair<std::size_t, int>, std::vector<std::pair<std::size_t, int>>,
                            std::greater<>> open;
        open.push({cur.letters.size(), 0});
        for (int spent = 0; !open.empty() && spent < 4000; ++spent) {
            const int at = open.top().second;
            open.pop();
            for (const twist_step& g : gens) {
                cyclic_walk nxt = apply_twist_step(nodes[static_cast<std::size_t>(at)].w, g);
                if (nxt.letters.size() > 4 * cur.letters.size() + 16) continue;
                if (!seen.insert(key_of(nxt)).second) continue;
                const int id = static_cast<int>(nodes.size());
                nodes.push_back({nxt, at, g});
                if (walks_equivalent(nxt, goal)) {
                    std::vector<twist_step> path;
                    for (int v = id; v > 0; v = nodes[static_cast<std::size_t>(v)].parent)
                        path.push_back(nodes[static_cast<std::size_t>(v)].step);
                    for (auto it = path.rbegin(); it != path.rend(); ++it) apply(*it);
                    return true;
                }
                open.push({nxt.letters.size(), id});
            }
        }
        return false;
    };
    for (int guard = 0; guard < 1024; ++guard) {
        homology_class h = homology_of(cur);
        const std::int64_t r = h.rank;
        if (r == 1 || r == -1) {
            for (int i = 0; i < cur.n; ++i) {
                const std::int64_t di = homology_of(cur).multidegree[static_cast<std::size_t>(i)];
                if (di != 0) apply({twist_step::generator::vert, i, -di * r});
            }
            break;
        }
        if (r == 0) {
            // gcd(0, dbar) = 1 forces dbar = +-1; one Pic twist gives rank -+1.
            apply({twist_step::generator::pic, 0, 1});
            continue;
        }
        if (try_variant(h, 1) || try_variant(h, -1)) continue;
        if (search_fallback()) break;
        throw not_spherical("normalization did not reach gamma_Pic");
    }

    if (!walks_equivalent(cur, gamma_pic(cur.n)))
        throw not_spherical("normalization did not reach gamma_Pic");
    return word;
}

} // namespace tb
