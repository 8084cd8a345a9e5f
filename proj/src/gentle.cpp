#include "torusband/gentle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "torusband/errors.hpp"

namespace tb {

namespace {
int mod(int x, int n) { return ((x % n) + n) % n; }
} // namespace

int path_source(const path& p, int n) {
    switch (p.kind) {
        case path_kind::idem: return p.idem_vertex;
        case path_kind::a:
        case path_kind::c:
        case path_kind::da:
        case path_kind::bc: return vertex_id(p.col, vertex_type::bottom, n);
        case path_kind::b:
        case path_kind::d: return vertex_id(p.col, vertex_type::middle, n);
    }
    return 0;
}

int path_target(const path& p, int n) {
    switch (p.kind) {
        case path_kind::idem: return p.idem_vertex;
        case path_kind::a:
        case path_kind::c: return vertex_id(p.col, vertex_type::middle, n);
        case path_kind::d:
        case path_kind::da: return vertex_id(p.col, vertex_type::top, n);
        case path_kind::b:
        case path_kind::bc: return vertex_id(mod(p.col - 1, n), vertex_type::top, n);
    }
    return 0;
}

std::optional<path> compose(const path& p, const path& q, int n) {
    if (path_target(q, n) != path_source(p, n)) return std::nullopt;
    if (q.kind == path_kind::idem) return p;
    if (p.kind == path_kind::idem) return q;
    if (p.col == q.col) {
        if (p.kind == path_kind::d && q.kind == path_kind::a) return path{path_kind::da, p.col, 0};
        if (p.kind == path_kind::b && q.kind == path_kind::c) return path{path_kind::bc, p.col, 0};
    }
    // b_i a_i = 0 = d_i c_i; anything longer leaves the basis.
    return std::nullopt;
}

std::vector<path> basis_paths(int u, int v, int n) {
    std::vector<path> out;
    if (u == v) out.push_back({path_kind::idem, 0, u});
    for (int i = 0; i < n; ++i) {
        for (path_kind k :
             {path_kind::a, path_kind::b, path_kind::c, path_kind::d, path_kind::da, path_kind::bc}) {
            path p{k, i, 0};
            if (path_source(p, n) == u && path_target(p, n) == v) out.push_back(p);
        }
    }
    return out;
}

path_lin lin_normalize(path_lin l) {
    std::sort(l.begin(), l.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    path_lin out;
    for (const auto& [p, c] : l) {
        const std::int64_t cc = field::norm(c);
        if (!out.empty() && out.back().first == p)
            out.back().second = field::add(out.back().second, cc);
        else
            out.push_back({p, cc});
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

path_lin lin_add(const path_lin& a, const path_lin& b) {
    path_lin out = a;
    out.insert(out.end(), b.begin(), b.end());
    return lin_normalize(std::move(out));
}

path_lin lin_scale(const path_lin& a, std::int64_t c) {
    path_lin out;
    for (const auto& [p, x] : a) out.push_back({p, field::mul(x, c)});
    return lin_normalize(std::move(out));
}

path_lin lin_compose(const path_lin& p, const path_lin& q, int n) {
    path_lin out;
    for (const auto& [pp, pc] : p)
        for (const auto& [qp, qc] : q)
            if (auto r = compose(pp, qp, n)) out.push_back({*r, field::mul(pc, qc)});
    return lin_normalize(std::move(out));
}

int projective_complex::min_deg() const {
    int d = summands.empty() ? 0 : summands[0].deg;
    for (const summand& s : summands) d = std::min(d, s.deg);
    return d;
}
int projective_complex::max_deg() const {
    int d = summands.empty() ? 0 : summands[0].deg;
    for (const summand& s : summands) d = std::max(d, s.deg);
    return d;
}

bool check_d2(const projective_complex& X) {
    std::map<std::pair<int, int>, path_lin> square;
    for (const auto& [k1, l1] : X.diff) {
        if (X.summands[static_cast<std::size_t>(k1.second)].deg !=
            X.summands[static_cast<std::size_t>(k1.first)].deg + 1)
            return false;
        for (const auto& [k2, l2] : X.diff) {
            if (k2.first != k1.second) continue;
            auto& cell = square[{k1.first, k2.second}];
            cell = lin_add(cell, lin_compose(l1, l2, X.n));
        }
    }
    for (const auto& [k, l] : square)
        if (!l.empty()) return false;
    return true;
}

projective_complex build_band_complex(const loop_matrix& m, std::int64_t lambda) {
    if (field::norm(lambda) == 0) throw domain_error("band scalar must be nonzero");
    const int n = m.n;
    const int nr = n * m.r;
    projective_complex X;
    X.n = n;

    // Boundary summands T_x, x in [0, nr): type T_{(x mod n) - 1}, degree -1.
    for (int x = 0; x < nr; ++x)
        X.summands.push_back({vertex_id(mod(x % n - 1, n), vertex_type::top, n), -1});

    auto add_entry = [&](int src, int tgt, path p, std::int64_t c) {
        X.diff[{src, tgt}] = lin_add(X.diff[{src, tgt}], {{p, c}});
    };

    for (int x = 0; x < nr; ++x) {
        const int i = x % n;
        const int tx = x, tx1 = (x + 1) % nr;
        const std::int64_t mx = m.entries[static_cast<std::size_t>(x)];
        const std::int64_t lam = (x == 0) ? lambda : 1;
        if (mx >= 0) {
            // interiors M_1 B_1 M_2 ... B_mx M_{mx+1}; M at degree 0, B at 1.
            std::vector<int> ids;
            for (std::int64_t k = 0; k < 2 * mx + 1; ++k) {
                const bool is_b = (k % 2) == 1;
                X.summands.push_back({vertex_id(i, is_b ? vertex_type::bottom : vertex_type::middle, n),
                                      is_b ? 1 : 0});
                ids.push_back(static_cast<int>(X.summands.size()) - 1);
            }
            add_entry(tx, ids.front(), {path_kind::b, i, 0}, 1);
            for (std::int64_t k = 0; k < mx; ++k) {
                add_entry(ids[static_cast<std::size_t>(2 * k)], ids[static_cast<std::size_t>(2 * k + 1)],
                          {path_kind::a, i, 0}, 1);
                add_entry(ids[static_cast<std::size_t>(2 * k + 2)], ids[static_cast<std::size_t>(2 * k + 1)],
                          {path_kind::c, i, 0}, 1);
            }
            add_entry(tx1, ids.back(), {path_kind::d, i, 0}, lam);
        } else {
            // interiors B_1 M_1 ... M_{p-1} B_p; B at degree 0, M at -1.
            const std::int64_t p = -mx;
            std::vector<int> ids;
            for (std::int64_t k = 0; k < 2 * p - 1; ++k) {
                const bool is_b = (k % 2) == 0;
                X.summands.push_back({vertex_id(i, is_b ? vertex_type::bottom : vertex_type::middle, n),
                                      is_b ? 0 : -1});
                ids.push_back(static_cast<int>(X.summands.size()) - 1);
            }
            add_entry(tx, ids.front(), {path_kind::bc, i, 0}, 1);
            for (std::int64_t k = 0; k + 1 < p; ++k) {
                add_entry(ids[static_cast<std::size_t>(2 * k + 1)], ids[static_cast<std::size_t>(2 * k)],
                          {path_kind::a, i, 0}, 1);
                add_entry(ids[static_cast<std::size_t>(2 * k + 1)], ids[static_cast<std::size_t>(2 * k + 2)],
                          {path_kind::c, i, 0}, 1);
            }
            add_entry(tx1, ids.back(), {path_kind::da, i, 0}, lam);
        }
    }
    return X;
}

projective_complex build_picard(std::int64_t lambda, int n) {
    loop_matrix zero{n, 1, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
    return build_band_complex(zero, lambda);
}

projective_complex build_skyscraper(int i, std::int64_t lambda, int n) {
    if (field::norm(lambda) == 0) throw domain_error("skyscraper scalar must be nonzero");
    projective_complex X;
    X.n = n;
    X.summands.push_back({vertex_id(i, vertex_type::middle, n), -1});
    X.summands.push_back({vertex_id(i, vertex_type::bottom, n), 0});
    X.diff[{0, 1}] = lin_normalize({{{path_kind::a, mod(i, n), 0}, 1},
                                    {{path_kind::c, mod(i, n), 0}, field::norm(lambda)}});
    return X;
}

namespace {

std::optional<std::int64_t> idem_coefficient(const path_lin& l) {
    for (const auto& [p, c] : l)
        if (p.kind == path_kind::idem) return c;
    return std::nullopt;
}

projective_complex drop_summands(const projective_complex& X, int s, int t) {
    projective_complex Y;
    Y.n = X.n;
    std::vector<int> remap(X.summands.size(), -1);
    for (std::size_t k = 0; k < X.summands.size(); ++k) {
        if (static_cast<int>(k) == s || static_cast<int>(k) == t) continue;
        remap[k] = static_cast<int>(Y.summands.size());
        Y.summands.push_back(X.summands[k]);
    }
    for (const auto& [key, l] : X.diff) {
        if (key.first == s || key.first == t || key.second == s || key.second == t) continue;
        if (!l.empty()) Y.diff[{remap[static_cast<std::size_t>(key.first)],
                                remap[static_cast<std::size_t>(key.second)]}] = l;
    }
    return Y;
}

} // namespace

projective_complex minimize(projective_complex X) {
    for (;;) {
        int src = -1, tgt = -1;
        std::int64_t unit = 0;
        for (const auto& [key, l] : X.diff) {
            if (auto c = idem_coefficient(l); c && *c != 0) {
                src = key.first;
                tgt = key.second;
                unit = *c;
                break;
            }
        }
        if (src < 0) break;
        const std::int64_t inv = field::inv(unit);
        projective_complex Y = X;
        for (const auto& [k1, l1] : X.diff) {
            if (k1.first != src || k1.second == tgt) continue; // src -> w, w != tgt
            for (const auto& [k2, l2] : X.diff) {
                if (k2.second != tgt || k2.first == src) continue; // u -> tgt, u != src
                // correction for u -> w: - inv * (src->w) o (u->tgt)
                path_lin corr = lin_scale(lin_compose(l2, l1, X.n), field::neg(inv));
                auto& cell = Y.diff[{k2.first, k1.second}];
                cell = lin_add(cell, corr);
            }
        }
        std::erase_if(Y.diff, [](const auto& e) { return e.second.empty(); });
        X = drop_summands(Y, src, tgt);
    }
    std::erase_if(X.diff, [](const auto& e) { return e.second.empty(); });
    return X;
}

bool is_minimal(const projective_complex& X) {
    for (const auto& [key, l] : X.diff)
        if (auto c = idem_coefficient(l); c && *c != 0) return false;
    return true;
}

bool commutes(const chain_map& f) {
    const int n = f.X.n;
    const std::int64_t sg = (f.shift % 2 == 0) ? 1 : field::neg(1);
    // component (u -> t): d_Y f - (-1)^s f d_X
    std::map<std::pair<int, int>, path_lin> acc;
    for (const auto& [fk, fl] : f.comps)
        for (const auto& [dk, dl] : f.Y.diff) {
            if (dk.first != fk.second) continue;
            auto& cell = acc[{fk.first, dk.second}];
            cell = lin_add(cell, lin_compose(fl, dl, n));
        }
    for (const auto& [dk, dl] : f.X.diff)
        for (const auto& [fk, fl] : f.comps) {
            if (fk.first != dk.second) continue;
            auto& cell = acc[{dk.first, fk.second}];
            cell = lin_add(cell, lin_scale(lin_compose(dl, fl, n), field::neg(sg)));
        }
    for (const auto& [k, l] : acc)
        if (!l.empty()) return false;
    return true;
}

projective_complex cone(const chain_map& f) {
    if (f.shift != 0) throw not_chain_map("cone expects a shift-0 chain map");
    if (!commutes(f)) throw not_chain_map();
    projective_complex C;
    C.n = f.X.n;
    const int nx = static_cast<int>(f.X.summands.size());
    for (const summand& s : f.X.summands) C.summands.push_back({s.vertex, s.deg - 1});
    for (const summand& s : f.Y.summands) C.summands.push_back(s);
    for (const auto& [k, l] : f.X.diff) C.diff[{k.first, k.second}] = lin_scale(l, field::neg(1));
    for (const auto& [k, l] : f.comps) C.diff[{k.first, nx + k.second}] = l;
    for (const auto& [k, l] : f.Y.diff) C.diff[{nx + k.first, nx + k.second}] = l;
    return minimize(std::move(C));
}

// --------------------------- hom computation ------------------------------

namespace {

struct unknown_space {
    // one unknown per (u, w, path) with deg_Y(w) = deg_X(u) + s
    std::vector<std::tuple<int, int, path>> unknowns;
    std::map<std::pair<int, int>, std::vector<std::pair<int, path>>> by_pair;
};

unknown_space graded_maps(const projective_complex& X, const projective_complex& Y, int s) {
    unknown_space sp;
    for (int u = 0; u < static_cast<int>(X.summands.size()); ++u)
        for (int w = 0; w < static_cast<int>(Y.summands.size()); ++w) {
            if (Y.summands[static_cast<std::size_t>(w)].deg !=
                X.summands[static_cast<std::size_t>(u)].deg + s)
                continue;
            for (const path& p : basis_paths(Y.summands[static_cast<std::size_t>(w)].vertex,
                                             X.summands[static_cast<std::size_t>(u)].vertex, X.n)) {
                sp.by_pair[{u, w}].push_back({static_cast<int>(sp.unknowns.size()), p});
                sp.unknowns.push_back({u, w, p});
            }
        }
    return sp;
}

/// Matrix of D_s : Hom^s -> Hom^{s+1}, D_s(f) = d_Y f - (-1)^s f d_X, as rows
/// indexed by (u, t, path) equations.
std::vector<std::vector<std::int64_t>> differential_matrix(const projective_complex& X,
                                                           const projective_complex& Y, int s,
                                                           const unknown_space& dom,
                                                           const unknown_space& cod) {
    const std::int64_t sg = (s % 2 == 0) ? 1 : field::neg(1);
    std::vector<std::vector<std::int64_t>> M(cod.unknowns.size(),
                                             std::vector<std::int64_t>(dom.unknowns.size(), 0));
    auto cod_index = [&](int u, int t, const path& p) -> int {
        auto it = cod.by_pair.find({u, t});
        if (it == cod.by_pair.end()) return -1;
        for (const auto& [idx, q] : it->second)
            if (q == p) return idx;
        return -1;
    };
    for (std::size_t col = 0; col < dom.unknowns.size(); ++col) {
        const auto& [u, w, p] = dom.unknowns[col];
        // d_Y o f : (u -> w -> t)
        for (const auto& [dk, dl] : Y.diff) {
            if (dk.first != w) continue;
            for (const auto& [dp, dc] : dl)
                if (auto r = compose(path{p}, dp, X.n); r) {
                    // composite label: first the differential path, then f's
                    const int row = cod_index(u, dk.second, *r);
                    if (row >= 0) M[static_cast<std::size_t>(row)][col] =
                        field::add(M[static_cast<std::size_t>(row)][col], dc);
                }
        }
        // f o d_X : (u' -> u -> w), scaled by -(-1)^s
        for (const auto& [dk, dl] : X.diff) {
            if (dk.second != u) continue;
            for (const auto& [dp, dc] : dl)
                if (auto r = compose(dp, path{p}, X.n); r) {
                    const int row = cod_index(dk.first, w, *r);
                    if (row >= 0) M[static_cast<std::size_t>(row)][col] =
                        field::add(M[static_cast<std::size_t>(row)][col],
                                   field::mul(field::neg(sg), dc));
                }
        }
    }
    return M;
}

std::int64_t rank_of(std::vector<std::vector<std::int64_t>> M) {
    if (M.empty() || M[0].empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::int64_t rank = 0;
    std::size_t rpos = 0;
    for (std::size_t c = 0; c < cols && rpos < rows; ++c) {
        std::size_t piv = rpos;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rpos], M[piv]);
        const std::int64_t inv = field::inv(M[rpos][c]);
        for (std::size_t cc = c; cc < cols; ++cc) M[rpos][cc] = field::mul(M[rpos][cc], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rpos || M[r][c] == 0) continue;
            const std::int64_t f = M[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                M[r][cc] = field::sub(M[r][cc], field::mul(f, M[rpos][cc]));
        }
        ++rpos;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::int64_t>> kernel_basis(std::vector<std::vector<std::int64_t>> M,
                                                    std::size_t cols) {
    // Row-reduce, then read off the free columns.
    const std::size_t rows = M.size();
    std::vector<std::ptrdiff_t> pivot_of_col(cols, -1);
    std::size_t rpos = 0;
    for (std::size_t c = 0; c < cols && rpos < rows; ++c) {
        std::size_t piv = rpos;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rpos], M[piv]);
        const std::int64_t inv = field::inv(M[rpos][c]);
        for (std::size_t cc = 0; cc < cols; ++cc) M[rpos][cc] = field::mul(M[rpos][cc], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rpos || M[r][c] == 0) continue;
            const std::int64_t f = M[r][c];
            for (std::size_t cc = 0; cc < cols; ++cc)
                M[r][cc] = field::sub(M[r][cc], field::mul(f, M[rpos][cc]));
        }
        pivot_of_col[c] = static_cast<std::ptrdiff_t>(rpos);
        ++rpos;
    }
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<std::int64_t> v(cols, 0);
        v[c] = 1;
        for (std::size_t cc = 0; cc < cols; ++cc)
            if (pivot_of_col[cc] >= 0)
                v[cc] = field::neg(M[static_cast<std::size_t>(pivot_of_col[cc])][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::int64_t hom_dim(const projective_complex& X, const projective_complex& Y, int s) {
    const auto dom = graded_maps(X, Y, s);
    const auto cod = graded_maps(X, Y, s + 1);
    const auto below = graded_maps(X, Y, s - 1);
    const std::int64_t n_s = static_cast<std::int64_t>(dom.unknowns.size());
    if (n_s == 0) return 0;
    const std::int64_t rank_ds = rank_of(differential_matrix(X, Y, s, dom, cod));
    const std::int64_t rank_prev = rank_of(differential_matrix(X, Y, s - 1, below, dom));
    return n_s - rank_ds - rank_prev;
}

std::int64_t hom_total(const projective_complex& X, const projective_complex& Y) {
    if (X.summands.empty() || Y.summands.empty()) return 0;
    std::int64_t total = 0;
    for (int s = Y.min_deg() - X.max_deg(); s <= Y.max_deg() - X.min_deg(); ++s)
        total += hom_dim(X, Y, s);
    return total;
}

std::vector<chain_map> hom_basis(const projective_complex& X, const projective_complex& Y, int s) {
    const auto dom = graded_maps(X, Y, s);
    const auto cod = graded_maps(X, Y, s + 1);
    const auto below = graded_maps(X, Y, s - 1);
    if (dom.unknowns.empty()) return {};

    auto cycles = kernel_basis(differential_matrix(X, Y, s, dom, cod), dom.unknowns.size());
    auto bmat = differential_matrix(X, Y, s - 1, below, dom);

    // Reduce cycle representatives against the boundary space: stack boundary
    // generators first, then keep the cycles that add new pivots.
    std::vector<std::vector<std::int64_t>> space;
    for (std::size_t c = 0; c < below.unknowns.size(); ++c) {
        std::vector<std::int64_t> v(dom.unknowns.size());
        for (std::size_t r = 0; r < dom.unknowns.size(); ++r) v[r] = bmat[r][c];
        space.push_back(std::move(v));
    }
    const std::int64_t brank = rank_of(space);
    std::vector<chain_map> out;
    for (const auto& cyc : cycles) {
        auto trial = space;
        trial.push_back(cyc);
        if (rank_of(trial) <= brank + static_cast<std::int64_t>(out.size())) continue;
        space.push_back(cyc);
        chain_map f;
        f.X = X;
        f.Y = Y;
        f.shift = s;
        for (std::size_t k = 0; k < dom.unknowns.size(); ++k) {
            if (cyc[k] == 0) continue;
            const auto& [u, w, p] = dom.unknowns[k];
            f.comps[{u, w}] = lin_add(f.comps[{u, w}], {{p, cyc[k]}});
        }
        out.push_back(std::move(f));
    }
    return out;
}

// --------------------------- canonical forms -------------------------------

namespace {

struct component_form {
    std::string shape;              // direction-annotated token string
    std::set<std::int64_t> scalars; // cycle holonomies over minimal traversals
    bool operator<(const component_form& o) const {
        return std::tie(shape, scalars) < std::tie(o.shape, o.scalars);
    }
    bool operator==(const component_form& o) const {
        return shape == o.shape && scalars == o.scalars;
    }
};

// One edge per (src, tgt, path, scalar) term of the differential; a band
// complex is then a single cycle and a string complex a simple path in this
// multigraph.
struct term_edge {
    int src, tgt;
    path p;
    std::int64_t c;
};

struct incidence {
    int edge;
    bool forward; // traversal leaves along the diff direction src -> tgt
};

std::string node_token(const summand& s) {
    return "v" + std::to_string(s.vertex) + "d" + std::to_string(s.deg) + ";";
}
std::string edge_token(const term_edge& e, bool forward) {
    return std::string(forward ? "F" : "B") + "k" + std::to_string(static_cast<int>(e.p.kind)) +
           "c" + std::to_string(e.p.col) + ";";
}

struct component_graph {
    const projective_complex* X{nullptr};
    std::vector<term_edge> edges;
    std::vector<std::vector<incidence>> adj;
};

/// Canonical traversal form of one connected component (nodes all of degree
/// <= 2); nullopt if some node has three or more incident edge terms.
std::optional<component_form> canonical_component(const component_graph& g,
                                                  const std::vector<int>& nodes, bool with_scalar) {
    component_form best;
    bool first = true;

    for (int v : nodes)
        if (g.adj[static_cast<std::size_t>(v)].size() > 2) return std::nullopt;

    if (nodes.size() == 1 && g.adj[static_cast<std::size_t>(nodes[0])].empty()) {
        best.shape = node_token(g.X->summands[static_cast<std::size_t>(nodes[0])]);
        best.scalars.insert(1);
        return best;
    }

    std::vector<int> ends;
    std::size_t edge_count = 0;
    for (int v : nodes) {
        if (g.adj[static_cast<std::size_t>(v)].size() == 1) ends.push_back(v);
        edge_count += g.adj[static_cast<std::size_t>(v)].size();
    }
    edge_count /= 2;
    const bool is_band = ends.empty();

    auto walk_from = [&](int start, int first_inc) {
        std::string shape;
        std::int64_t holonomy = 1;
        int cur = start;
        int in_edge = -1;
        for (std::size_t steps = 0; steps <= edge_count; ++steps) {
            shape += node_token(g.X->summands[static_cast<std::size_t>(cur)]);
            const incidence* next = nullptr;
            if (steps == 0) {
                next = &g.adj[static_cast<std::size_t>(cur)][static_cast<std::size_t>(first_inc)];
            } else {
                for (const incidence& inc : g.adj[static_cast<std::size_t>(cur)])
                    if (inc.edge != in_edge) { next = &inc; break; }
            }
            if (!next || steps == edge_count) break;
            const term_edge& e = g.edges[static_cast<std::size_t>(next->edge)];
            shape += edge_token(e, next->forward);
            holonomy = next->forward ? field::mul(holonomy, e.c) : field::mul(holonomy, field::inv(e.c));
            in_edge = next->edge;
            cur = next->forward ? e.tgt : e.src;
        }
        return std::pair<std::string, std::int64_t>{shape, holonomy};
    };

    std::vector<std::pair<int, int>> starts;
    if (!is_band) {
        for (int e : ends) starts.push_back({e, 0});
    } else {
        for (int v : nodes)
            for (int k = 0; k < static_cast<int>(g.adj[static_cast<std::size_t>(v)].size()); ++k)
                starts.push_back({v, k});
    }
    for (const auto& [v, k] : starts) {
        auto [shape, hol] = walk_from(v, k);
        // String scalars normalize away by rescaling summand bases.
        const std::int64_t inv = (with_scalar && is_band) ? hol : 1;
        if (first || shape < best.shape) {
            best.shape = shape;
            best.scalars = {inv};
            first = false;
        } else if (shape == best.shape) {
            best.scalars.insert(inv);
        }
    }
    return best;
}

/// nullopt when some component is not a string or band shape.
std::optional<std::multiset<component_form>> canonical_forms(const projective_complex& X,
                                                             bool with_scalar) {
    if (!is_minimal(X)) throw not_minimal();
    component_graph g;
    g.X = &X;
    g.adj.resize(X.summands.size());
    for (const auto& [k, l] : X.diff)
        for (const auto& [p, c] : l) {
            const int id = static_cast<int>(g.edges.size());
            g.edges.push_back({k.first, k.second, p, c});
            g.adj[static_cast<std::size_t>(k.first)].push_back({id, true});
            g.adj[static_cast<std::size_t>(k.second)].push_back({id, false});
        }
    std::vector<int> comp(X.summands.size(), -1);
    std::multiset<component_form> forms;
    for (std::size_t v = 0; v < X.summands.size(); ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> nodes;
        std::vector<int> stack{static_cast<int>(v)};
        comp[v] = static_cast<int>(v);
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            nodes.push_back(cur);
            for (const incidence& inc : g.adj[static_cast<std::size_t>(cur)]) {
                const term_edge& e = g.edges[static_cast<std::size_t>(inc.edge)];
                const int other = inc.forward ? e.tgt : e.src;
                if (comp[static_cast<std::size_t>(other)] < 0) {
                    comp[static_cast<std::size_t>(other)] = static_cast<int>(v);
                    stack.push_back(other);
                }
            }
        }
        auto form = canonical_component(g, nodes, with_scalar);
        if (!form) return std::nullopt;
        forms.insert(*form);
    }
    return forms;
}

std::multiset<std::pair<int, int>> graded_summands(const projective_complex& X) {
    std::multiset<std::pair<int, int>> out;
    for (const summand& s : X.summands) out.insert({s.deg, s.vertex});
    return out;
}

/// Fallback isomorphism test: minimal complexes are isomorphic iff some
/// homotopy class of shift-0 maps has a contractible cone.
bool iso_by_cone_search(const projective_complex& X, const projective_complex& Y) {
    if (graded_summands(X) != graded_summands(Y)) return false;
    auto basis = hom_basis(X, Y, 0);
    if (basis.empty()) return X.summands.empty() && Y.summands.empty();
    auto is_equivalence = [&](const chain_map& f) { return cone(f).summands.empty(); };
    for (const chain_map& f : basis)
        if (is_equivalence(f)) return true;
    // Deterministic pseudo-random combinations of the basis.
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto rnd = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 40; ++trial) {
        chain_map f;
        f.X = X;
        f.Y = Y;
        f.shift = 0;
        for (const chain_map& g : basis) {
            const std::int64_t coeff = field::norm(static_cast<std::int64_t>(rnd() % 1000) + 1);
            for (const auto& [k, l] : g.comps)
                f.comps[k] = lin_add(f.comps[k], lin_scale(l, coeff));
        }
        if (is_equivalence(f)) return true;
    }
    return false;
}

} // namespace

bool is_iso(const projective_complex& X, const projective_complex& Y) {
    if (X.n != Y.n) return false;
    auto fx = canonical_forms(X, true);
    auto fy = canonical_forms(Y, true);
    if (fx && fy) return *fx == *fy;
    return iso_by_cone_search(X, Y);
}

bool is_iso_up_to_scalar(const projective_complex& X, const projective_complex& Y) {
    if (X.n != Y.n) return false;
    auto fx = canonical_forms(X, false);
    auto fy = canonical_forms(Y, false);
    if (fx && fy) return *fx == *fy;
    return iso_by_cone_search(X, Y);
}

std::optional<std::int64_t> band_scalar(const projective_complex& X) {
    auto forms = canonical_forms(X, true);
    if (!forms || forms->size() != 1) return std::nullopt;
    const component_form& f = *forms->begin();
    if (f.scalars.empty()) return std::nullopt;
    return *f.scalars.begin();
}

std::int64_t dim_algebra(int n) { return 9LL * n; }

std::int64_t dim_algebra_brute_force(int n) {
    // All paths of (Q(n), R) by breadth-first composition of arrows.
    struct arrow {
        path_kind k;
        int col;
    };
    std::vector<path> alive;
    for (int v = 0; v < 3 * n; ++v) alive.push_back({path_kind::idem, 0, v});
    // Represent longer paths as arrow sequences; admissible iff no b_i a_i or
    // d_i c_i factor.
    std::vector<std::vector<arrow>> frontier;
    for (int i = 0; i < n; ++i)
        for (path_kind k : {path_kind::a, path_kind::b, path_kind::c, path_kind::d})
            frontier.push_back({{k, i}});
    std::int64_t count = 3LL * n;
    while (!frontier.empty()) {
        count += static_cast<std::int64_t>(frontier.size());
        std::vector<std::vector<arrow>> next;
        for (const auto& seq : frontier) {
            const arrow& last = seq.back();
            const path lastp{last.k, last.col, 0};
            for (int i = 0; i < n; ++i)
                for (path_kind k : {path_kind::a, path_kind::b, path_kind::c, path_kind::d}) {
                    const path cand{k, i, 0};
                    if (path_source(cand, n) != path_target(lastp, n)) continue;
                    const bool killed = (i == last.col) &&
                                        ((k == path_kind::b && last.k == path_kind::a) ||
                                         (k == path_kind::d && last.k == path_kind::c));
                    if (killed) continue;
                    auto longer = seq;
                    longer.push_back({k, i});
                    next.push_back(std::move(longer));
                }
        }
        frontier = std::move(next);
    }
    return count;
}

} // namespace tb
