#include "torusband/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "torusband/errors.hpp"

namespace tb {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

} // namespace

std::vector<std::int64_t> partial_sums(int r, const std::vector<std::int64_t>& d) {
    const int n = static_cast<int>(d.size());
    std::vector<std::int64_t> s(static_cast<std::size_t>(n) * r + 1, 0);
    for (int i = 0; i < n * r; ++i)
        s[static_cast<std::size_t>(i) + 1] = s[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>(i % n)];
    return s;
}

loop_matrix canonical_sequence(int r, const std::vector<std::int64_t>& d) {
    if (r < 1 || d.empty()) throw domain_error("canonical_sequence needs r >= 1 and n >= 1");
    const std::int64_t dbar = std::accumulate(d.begin(), d.end(), std::int64_t{0});
    if (gcd64(r, dbar) != 1) throw not_coprime();
    const auto s = partial_sums(r, d);
    loop_matrix m;
    m.n = static_cast<int>(d.size());
    m.r = r;
    m.entries.resize(static_cast<std::size_t>(m.n) * r);
    // |rZ cap (S_x, S_{x+1}]| with the sign convention folds into a floor
    // difference, valid for both orderings of the endpoints.
    for (std::size_t x = 0; x < m.entries.size(); ++x)
        m.entries[x] = floor_div(s[x + 1], r) - floor_div(s[x], r);
    return m;
}

std::vector<std::int64_t> degree_multiset(int r, std::int64_t di) {
    if (r < 1) throw domain_error("degree_multiset needs r >= 1");
    const std::int64_t rm = ((di % r) + r) % r; // r - a
    const std::int64_t q = (di - rm) / r;
    std::vector<std::int64_t> out;
    for (std::int64_t k = 0; k < r - rm; ++k) out.push_back(q);
    for (std::int64_t k = 0; k < rm; ++k) out.push_back(q + 1);
    return out;
}

simplicity_report bdg_check(const loop_matrix& m, t_range_mode t_range, cond2_mode cond2) {
    simplicity_report rep;
    const int n = m.n;
    const std::int64_t nr = static_cast<std::int64_t>(n) * m.r;
    const homology_class h = homology_of(m);

    rep.gcd_value = gcd64(m.r, h.total_degree);
    rep.coprime_ok = rep.gcd_value == 1;

    if (cond2 == cond2_mode::column) {
        for (int i = 0; i < n; ++i) {
            std::int64_t lo = m.entries[static_cast<std::size_t>(i)], hi = lo;
            for (int j = 1; j < m.r; ++j) {
                const std::int64_t e = m.entries[static_cast<std::size_t>(i + j * n)];
                lo = std::min(lo, e);
                hi = std::max(hi, e);
            }
            if (hi - lo > 1) rep.gap_columns.push_back(i);
        }
    } else {
        const auto [lo, hi] = std::minmax_element(m.entries.begin(), m.entries.end());
        if (*hi - *lo > 1)
            for (int i = 0; i < n; ++i) rep.gap_columns.push_back(i);
    }
    rep.column_gap_ok = rep.gap_columns.empty();

    std::vector<std::int64_t> ts;
    if (t_range == t_range_mode::column) {
        for (std::int64_t t = n; t <= nr - n; t += n) ts.push_back(t);
    } else {
        for (std::int64_t t = 1; t < nr; ++t) ts.push_back(t);
    }
    for (std::int64_t t : ts) {
        std::vector<std::int64_t> diff(static_cast<std::size_t>(nr));
        bool all_zero = true;
        for (std::int64_t x = 0; x < nr; ++x) {
            diff[static_cast<std::size_t>(x)] = m.at(x) - m.at(x + t);
            all_zero = all_zero && diff[static_cast<std::size_t>(x)] == 0;
        }
        if (all_zero) continue; // same rotation; no pattern to find
        for (std::int64_t x = 0; x < nr; ++x) {
            const std::int64_t a = diff[static_cast<std::size_t>(x)];
            if (a != 1 && a != -1) continue;
            std::int64_t y = (x + 1) % nr, zeros = 0;
            while (diff[static_cast<std::size_t>(y)] == 0 && zeros < nr) {
                y = (y + 1) % nr;
                ++zeros;
            }
            if (diff[static_cast<std::size_t>(y)] == a)
                rep.patterns.push_back({t, x, zeros, static_cast<int>(a)});
        }
    }
    rep.pattern_ok = rep.patterns.empty();
    return rep;
}

namespace {

std::vector<std::vector<std::int64_t>> multiset_permutations(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    std::vector<std::vector<std::int64_t>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

loop_matrix canonical_rotation(const loop_matrix& m) {
    loop_matrix best = m;
    for (int k = 1; k < m.r; ++k) {
        loop_matrix rot = rotate_rows(m, k);
        if (rot.entries < best.entries) best = rot;
    }
    return best;
}

} // namespace

std::vector<loop_matrix> enumerate_simple_candidates(int n, int r,
                                                     const std::vector<std::int64_t>& d,
                                                     const enumeration_limits& limits,
                                                     bool parallel) {
    if (static_cast<int>(d.size()) != n) throw domain_error("multidegree length must equal n");
    if (n > limits.n_max || r > limits.r_max) throw search_too_large();
    const std::int64_t dbar = std::accumulate(d.begin(), d.end(), std::int64_t{0});
    if (gcd64(r, dbar) != 1) throw not_coprime();
    for (std::int64_t di : d)
        if (di < 0 || di >= r) throw domain_error("multidegree must be normalized into [0, r)^n");

    std::vector<std::vector<std::vector<std::int64_t>>> perms;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        perms.push_back(multiset_permutations(degree_multiset(r, d[static_cast<std::size_t>(i)])));
        total *= perms.back().size();
        if (total > limits.candidate_cap) throw search_too_large();
    }

    const std::uint64_t outer = perms[0].size();
    std::uint64_t inner = total / outer;
    std::vector<std::vector<loop_matrix>> found(outer);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::int64_t p0 = 0; p0 < static_cast<std::int64_t>(outer); ++p0) {
        for (std::uint64_t rest = 0; rest < inner; ++rest) {
            loop_matrix cand;
            cand.n = n;
            cand.r = r;
            cand.entries.assign(static_cast<std::size_t>(n) * r, 0);
            std::uint64_t idx = rest;
            for (int i = 0; i < n; ++i) {
                const auto& column =
                    (i == 0) ? perms[0][static_cast<std::size_t>(p0)]
                             : perms[static_cast<std::size_t>(i)][idx % perms[static_cast<std::size_t>(i)].size()];
                if (i != 0) idx /= perms[static_cast<std::size_t>(i)].size();
                for (int j = 0; j < r; ++j)
                    cand.entries[static_cast<std::size_t>(j * n + i)] = column[static_cast<std::size_t>(j)];
            }
            if (!is_primitive(cand)) continue;
            if (!bdg_check(cand).simple()) continue;
            found[static_cast<std::size_t>(p0)].push_back(canonical_rotation(cand));
        }
    }

    std::vector<loop_matrix> classes;
    for (auto& bucket : found)
        for (auto& m : bucket)
            if (std::find(classes.begin(), classes.end(), m) == classes.end())
                classes.push_back(std::move(m));
    std::sort(classes.begin(), classes.end(),
              [](const loop_matrix& a, const loop_matrix& b) { return a.entries < b.entries; });
    return classes;
}

peel_result extension_peel(const loop_matrix& m, int i) {
    if (m.r < 2) throw domain_error("extension_peel requires rank >= 2");
    if (i < 0 || i >= m.n * m.r) throw domain_error("peel base index out of range");
    const int n = m.n;
    peel_result out;
    out.line_degree.assign(static_cast<std::size_t>(n), 0);
    out.line_degree[static_cast<std::size_t>(i % n)] = std::max(m.at(i), m.at(i + n)) + 1;
    for (int j = 1; j < n; ++j)
        out.line_degree[static_cast<std::size_t>((i + j) % n)] = m.at(i + j);

    out.reduced.n = n;
    out.reduced.r = m.r - 1;
    out.reduced.entries.reserve(static_cast<std::size_t>(n) * (m.r - 1));
    out.reduced.entries.push_back(m.at(i) - (std::max(m.at(i), m.at(i + n)) + 1) + m.at(i + n));
    for (int x = 1; x < n * (m.r - 1); ++x) out.reduced.entries.push_back(m.at(i + n + x));
    return out;
}

std::vector<std::vector<std::int64_t>> peel_tower(const loop_matrix& m) {
    std::vector<std::vector<std::int64_t>> degrees;
    loop_matrix cur = m;
    while (cur.r >= 2) {
        peel_result step = extension_peel(cur, 0);
        degrees.push_back(step.line_degree);
        cur = std::move(step.reduced);
    }
    degrees.push_back(homology_of(cur).multidegree);
    return degrees;
}

planar_representative geometric_representative(int r, const std::vector<std::int64_t>& d) {
    const int n = static_cast<int>(d.size());
    const std::int64_t dbar = std::accumulate(d.begin(), d.end(), std::int64_t{0});
    if (gcd64(r, dbar) != 1) throw not_coprime();
    const auto s = partial_sums(r, d);
    planar_representative rep;
    rep.n = n;
    rep.r = r;
    for (int j = 0; j < n * r; ++j) {
        planar_segment seg;
        seg.column = j % n;
        seg.y0 = ((s[static_cast<std::size_t>(j)] % r) + r) % r;
        seg.y1 = seg.y0 + d[static_cast<std::size_t>(j % n)];
        rep.segments.push_back(seg);
    }
    return rep;
}

std::int64_t count_planar_crossings(const planar_representative& rep) {
    std::int64_t crossings = 0;
    const std::int64_t r = rep.r;
    for (std::size_t a = 0; a < rep.segments.size(); ++a) {
        for (std::size_t b = a + 1; b < rep.segments.size(); ++b) {
            const planar_segment& A = rep.segments[a];
            const planar_segment& B = rep.segments[b];
            if (A.column != B.column) continue;
            const std::int64_t u0 = A.y0 - B.y0, u1 = A.y1 - B.y1;
            const std::int64_t lo = std::min(u0, u1), hi = std::max(u0, u1);
            // Strictly interior sign change of u(t) - k*r for each torus lift.
            for (std::int64_t k = floor_div(lo, r); k * r <= hi; ++k) {
                const std::int64_t v0 = u0 - k * r, v1 = u1 - k * r;
                if ((v0 > 0 && v1 < 0) || (v0 < 0 && v1 > 0)) ++crossings;
            }
        }
    }
    return crossings;
}

std::string render_svg(const planar_representative& rep) {
    const double W = 120.0, H = 120.0, pad = 20.0;
    const double width = pad * 2 + W * rep.n, height = pad * 2 + H;
    const double rr = static_cast<double>(rep.r);
    auto X = [&](double x) { return pad + x * W; };
    auto Y = [&](double y) { return pad + (1.0 - y) * H; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "  <rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << W * rep.n
        << "\" height=\"" << H << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= rep.n; ++i)
        svg << "  <line x1=\"" << X(i) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(i) << "\" y2=\""
            << Y(1) << "\" stroke=\"#bbb\" stroke-width=\"0.5\" stroke-dasharray=\"4 3\"/>\n";
    // Marked points are drawn at heights (k + 1/2)/r so segments stay away
    // from the punctures at the lattice corners.
    for (const planar_segment& seg : rep.segments) {
        const double y0 = (static_cast<double>(seg.y0) + 0.5) / rr;
        const double y1 = (static_cast<double>(seg.y1) + 0.5) / rr;
        double t0 = 0.0;
        double cy = y0;
        const double dy = y1 - y0;
        // Split the straight line at integer heights (torus wraparound).
        while (true) {
            double base = std::floor(cy);
            if (cy == base && dy < 0) base -= 1.0; // re-enter from the top edge
            double tn = 1.0;
            if (dy > 0 && y1 > base + 1.0) tn = (base + 1.0 - y0) / dy;
            if (dy < 0 && y1 < base) tn = (base - y0) / dy;
            const double ya = cy - base;
            const double yb_raw = y0 + dy * tn;
            const double yb = yb_raw - base;
            svg << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\""
                << X(seg.column + t0) << "," << Y(ya) << " " << X(seg.column + tn) << "," << Y(yb)
                << "\"/>\n";
            if (tn >= 1.0 - 1e-12) break;
            t0 = tn;
            cy = yb_raw;
        }
    }
    for (int i = 0; i <= rep.n; ++i)
        for (int e = 0; e <= 1; ++e)
            svg << "  <circle cx=\"" << X(i) << "\" cy=\"" << Y(e) << "\" r=\"3.5\" fill=\"white\" "
                << "stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tb
