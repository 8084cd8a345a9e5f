#include "torusband/walks.hpp"

#include <algorithm>
#include <numeric>

namespace tb {

namespace {

int mod(std::int64_t x, int n) { return static_cast<int>(((x % n) + n) % n); }

/// Lexicographically least rotation (plain O(L^2); walks stay desk-sized).
std::vector<letter> least_rotation(std::vector<letter> v) {
    if (v.empty()) return v;
    const std::size_t L = v.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < L; ++s) {
        for (std::size_t k = 0; k < L; ++k) {
            const letter& x = v[(s + k) % L];
            const letter& y = v[(best + k) % L];
            if (x < y) { best = s; break; }
            if (y < x) break;
        }
    }
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(best), v.end());
    return v;
}

std::vector<letter> reversed_inverse(const std::vector<letter>& v) {
    std::vector<letter> out;
    out.reserve(v.size());
    for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

} // namespace

int letter_source(const letter& l, int n) {
    if (l.kind == letter_kind::eps) return l.sign > 0 ? mod(l.col, n) : mod(l.col + 1, n);
    return mod(l.col + 1, n); // kappa_j is a loop at v_{j+1}
}

int letter_target(const letter& l, int n) {
    if (l.kind == letter_kind::eps) return l.sign > 0 ? mod(l.col + 1, n) : mod(l.col, n);
    return mod(l.col + 1, n);
}

cyclic_walk reduce_walk(std::vector<letter> raw, int n) {
    if (n < 1) throw not_composable("n must be >= 1");
    if (raw.empty()) throw contractible_loop();
    for (auto& l : raw) {
        if (l.col < 0 || l.col >= n) throw not_composable("letter column out of range");
        if (l.sign != 1 && l.sign != -1) throw not_composable("letter sign must be +1 or -1");
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const letter& cur = raw[i];
        const letter& nxt = raw[(i + 1) % raw.size()];
        if (letter_target(cur, n) != letter_source(nxt, n)) throw not_composable();
    }
    // Cyclic free reduction.
    bool changed = true;
    while (changed && !raw.empty()) {
        changed = false;
        std::vector<letter> out;
        out.reserve(raw.size());
        for (const letter& l : raw) {
            if (!out.empty() && out.back() == inverse(l)) {
                out.pop_back();
                changed = true;
            } else {
                out.push_back(l);
            }
        }
        while (out.size() >= 2 && out.front() == inverse(out.back())) {
            out.erase(out.begin());
            out.pop_back();
            changed = true;
        }
        raw = std::move(out);
    }
    if (raw.empty()) throw contractible_loop();
    return cyclic_walk{n, least_rotation(std::move(raw))};
}

bool walks_equivalent(const cyclic_walk& a, const cyclic_walk& b) {
    if (a.n != b.n) return false;
    if (a.letters == b.letters) return true;
    return least_rotation(reversed_inverse(a.letters)) == b.letters;
}

bool is_primitive(const cyclic_walk& w) {
    const std::size_t L = w.letters.size();
    for (std::size_t p = 1; p < L; ++p) {
        if (L % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i < L && periodic; ++i)
            periodic = w.letters[i] == w.letters[(i + p) % L];
        if (periodic) return false;
    }
    return true;
}

bool is_cvb(const cyclic_walk& w) {
    bool has_eps = false;
    for (const letter& l : w.letters) {
        if (l.kind == letter_kind::eps) {
            if (l.sign < 0) return false;
            has_eps = true;
        }
    }
    return has_eps;
}

loop_matrix matrix_from_walk(const cyclic_walk& w) {
    if (!is_cvb(w)) throw not_monotone();
    const std::size_t L = w.letters.size();
    // Rotate so the walk starts at an eps of column 0.
    std::size_t start = L;
    for (std::size_t i = 0; i < L; ++i)
        if (w.letters[i].kind == letter_kind::eps && w.letters[i].col == 0) { start = i; break; }
    if (start == L) throw not_monotone("CVb walk has no column-0 eps letter");

    std::vector<std::int64_t> entries;
    int expected_col = 0;
    std::size_t i = 0;
    while (i < L) {
        const letter& e = w.letters[(start + i) % L];
        if (e.kind != letter_kind::eps || e.col != expected_col)
            throw not_monotone("eps letters do not cycle through the columns");
        std::int64_t run = 0;
        ++i;
        while (i < L) {
            const letter& k = w.letters[(start + i) % L];
            if (k.kind != letter_kind::kappa) break;
            if (k.col != e.col) throw not_monotone("kappa letter at the wrong vertex");
            run += k.sign;
            ++i;
        }
        entries.push_back(run);
        expected_col = mod(expected_col + 1, w.n);
    }
    if (entries.size() % static_cast<std::size_t>(w.n) != 0 || expected_col != 0)
        throw not_monotone("eps count is not a multiple of n");
    return loop_matrix{w.n, static_cast<int>(entries.size()) / w.n, std::move(entries)};
}

cyclic_walk walk_from_matrix(const loop_matrix& m) {
    std::vector<letter> raw;
    const int nr = m.n * m.r;
    raw.reserve(static_cast<std::size_t>(nr) * 2);
    for (int x = 0; x < nr; ++x) {
        const int col = x % m.n;
        raw.push_back({letter_kind::eps, col, 1});
        const std::int64_t mx = m.entries[static_cast<std::size_t>(x)];
        for (std::int64_t k = 0; k < std::llabs(mx); ++k)
            raw.push_back({letter_kind::kappa, col, mx > 0 ? 1 : -1});
    }
    return reduce_walk(std::move(raw), m.n);
}

homology_class homology_of(const cyclic_walk& w) {
    homology_class h;
    h.multidegree.assign(static_cast<std::size_t>(w.n), 0);
    std::int64_t eps0 = 0;
    for (const letter& l : w.letters) {
        if (l.kind == letter_kind::eps) {
            if (l.col == 0) eps0 += l.sign;
        } else {
            h.multidegree[static_cast<std::size_t>(l.col)] += l.sign;
        }
    }
    h.rank = eps0;
    h.total_degree = std::accumulate(h.multidegree.begin(), h.multidegree.end(), std::int64_t{0});
    return h;
}

homology_class homology_of(const loop_matrix& m) {
    homology_class h;
    h.rank = m.r;
    h.multidegree.assign(static_cast<std::size_t>(m.n), 0);
    for (int x = 0; x < m.n * m.r; ++x)
        h.multidegree[static_cast<std::size_t>(x % m.n)] += m.entries[static_cast<std::size_t>(x)];
    h.total_degree = std::accumulate(h.multidegree.begin(), h.multidegree.end(), std::int64_t{0});
    return h;
}

bool is_non_separating(const cyclic_walk& w, bool simple) {
    if (!simple) throw not_simple();
    homology_class h = homology_of(w);
    if (h.rank != 0) return true;
    return std::any_of(h.multidegree.begin(), h.multidegree.end(),
                       [](std::int64_t d) { return d != 0; });
}

loop_matrix contract(const loop_matrix& m, int q) {
    if (m.n < 2) throw domain_error("contract requires n >= 2");
    if (q < 0 || q > m.n - 2) throw domain_error("contract column index out of range");
    loop_matrix out;
    out.n = m.n - 1;
    out.r = m.r;
    out.entries.reserve(static_cast<std::size_t>(out.n) * out.r);
    for (int row = 0; row < m.r; ++row) {
        for (int col = 0; col < m.n; ++col) {
            const std::int64_t e = m.entries[static_cast<std::size_t>(row * m.n + col)];
            if (col == q)
                out.entries.push_back(e + m.entries[static_cast<std::size_t>(row * m.n + col + 1)]);
            else if (col != q + 1)
                out.entries.push_back(e);
        }
    }
    return out;
}

loop_matrix rotate_rows(const loop_matrix& m, int k) {
    const int nr = m.n * m.r;
    loop_matrix out{m.n, m.r, std::vector<std::int64_t>(static_cast<std::size_t>(nr))};
    for (int x = 0; x < nr; ++x)
        out.entries[static_cast<std::size_t>(x)] = m.at(x + static_cast<std::int64_t>(k) * m.n);
    return out;
}

bool is_primitive(const loop_matrix& m) {
    for (int s = 1; s < m.r; ++s) {
        if (m.r % s != 0) continue;
        bool periodic = true;
        for (int x = 0; x < m.n * m.r && periodic; ++x)
            periodic = m.entries[static_cast<std::size_t>(x)] == m.at(x + static_cast<std::int64_t>(s) * m.n);
        if (periodic) return false;
    }
    return true;
}

bool matrices_equivalent(const loop_matrix& a, const loop_matrix& b) {
    if (a.n != b.n || a.r != b.r) return false;
    for (int k = 0; k < a.r; ++k)
        if (rotate_rows(a, k) == b) return true;
    return false;
}

cyclic_walk gamma_pic(int n) {
    std::vector<letter> raw;
    for (int i = 0; i < n; ++i) raw.push_back({letter_kind::eps, i, 1});
    return reduce_walk(std::move(raw), n);
}

cyclic_walk kappa_loop(int n, int i) {
    return reduce_walk({{letter_kind::kappa, i, 1}}, n);
}

} // namespace tb
