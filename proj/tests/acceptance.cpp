// Acceptance sweep: one pass/fail line per criterion, exit code = number of
// failing criteria.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "torusband/gentle.hpp"
#include "torusband/intersections.hpp"
#include "torusband/sequences.hpp"
#include "torusband/twists.hpp"

using namespace tb;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, double budget_ms,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = clk::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(clk::now() - t0).count();
    if (ms > budget_ms) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("criterion %2d %-28s %s (%.2f ms / %.0f ms)%s%s\n", id, name.c_str(),
                ok ? "PASS" : "FAIL", ms, budget_ms, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
}

/// All coprime (r, dbar) samples with n <= n_max, r <= r_max, entries of d in
/// [-bound, bound].
template <typename F>
bool for_coprime_range(int n_max, int r_max, std::int64_t bound, F&& fn) {
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::int64_t> d(static_cast<std::size_t>(n), -bound);
        for (;;) {
            const std::int64_t dbar = std::accumulate(d.begin(), d.end(), std::int64_t{0});
            for (int r = 1; r <= r_max; ++r)
                if (std::gcd(static_cast<std::int64_t>(r), dbar) == 1)
                    if (!fn(n, r, d)) return false;
            int i = 0;
            while (i < n && d[static_cast<std::size_t>(i)] == bound) d[static_cast<std::size_t>(i++)] = -bound;
            if (i == n) break;
            ++d[static_cast<std::size_t>(i)];
        }
    }
    return true;
}

std::string show(int r, const std::vector<std::int64_t>& d) {
    std::string s = "r=" + std::to_string(r) + " d=(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

} // namespace

int main() {
    criterion(1, "canonical sequence exactness", 1.0, [](std::string& detail) {
        const loop_matrix m = canonical_sequence(2, {2, -1});
        if (m.entries != std::vector<std::int64_t>{1, -1, 1, 0}) {
            detail = "wrong entries";
            return false;
        }
        return true;
    });

    criterion(2, "BDG validity sweep", 5000.0, [](std::string& detail) {
        return for_coprime_range(3, 6, 6, [&](int, int r, const std::vector<std::int64_t>& d) {
            if (!bdg_check(canonical_sequence(r, d)).simple()) {
                detail = show(r, d);
                return false;
            }
            return true;
        });
    });

    criterion(3, "simplicity sweep", 10000.0, [](std::string& detail) {
        return for_coprime_range(3, 6, 6, [&](int, int r, const std::vector<std::int64_t>& d) {
            const loop_matrix m = canonical_sequence(r, d);
            if (self_intersections(m).count != 0 ||
                count_planar_crossings(geometric_representative(r, d)) != 0) {
                detail = show(r, d);
                return false;
            }
            return true;
        });
    });

    criterion(4, "uniqueness enumeration", 30000.0, [](std::string& detail) {
        for (int n = 1; n <= 2; ++n)
            for (int r = 1; r <= 5; ++r) {
                std::vector<std::int64_t> d(static_cast<std::size_t>(n), 0);
                for (;;) {
                    const std::int64_t dbar = std::accumulate(d.begin(), d.end(), std::int64_t{0});
                    if (std::gcd(static_cast<std::int64_t>(r), dbar) == 1) {
                        const auto classes = enumerate_simple_candidates(n, r, d);
                        if (classes.size() != 1 ||
                            !matrices_equivalent(classes[0], canonical_sequence(r, d))) {
                            detail = show(r, d);
                            return false;
                        }
                    }
                    int i = 0;
                    while (i < n && d[static_cast<std::size_t>(i)] == r - 1) d[static_cast<std::size_t>(i++)] = 0;
                    if (i == n) break;
                    ++d[static_cast<std::size_t>(i)];
                }
            }
        return true;
    });

    criterion(5, "oracle equivalence", 60000.0, [](std::string& detail) {
        std::mt19937_64 rng(2026);
        std::uniform_int_distribution<int> dn(1, 2), dr(1, 3);
        std::uniform_int_distribution<std::int64_t> de(-2, 2);
        int done = 0;
        while (done < 200) {
            const int n = dn(rng);
            loop_matrix a{n, dr(rng), {}}, b{n, dr(rng), {}};
            a.entries.resize(static_cast<std::size_t>(n) * a.r);
            b.entries.resize(static_cast<std::size_t>(n) * b.r);
            for (auto& e : a.entries) e = de(rng);
            for (auto& e : b.entries) e = de(rng);
            if (!is_primitive(a) || !is_primitive(b) || matrices_equivalent(a, b)) continue;
            const std::int64_t combinatorial = intersections_cvb(a, b).count;
            const std::int64_t oracle =
                hom_total(build_band_complex(a, 5), build_band_complex(b, 11));
            if (combinatorial != oracle) {
                detail = "count " + std::to_string(combinatorial) + " vs hom " +
                         std::to_string(oracle);
                return false;
            }
            ++done;
        }
        return true;
    });

    criterion(6, "spherical endomorphisms", 10000.0, [](std::string& detail) {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> dn(1, 3), dr(1, 4);
        std::uniform_int_distribution<std::int64_t> de(-3, 3);
        int done = 0;
        while (done < 20) {
            const int n = dn(rng), r = dr(rng);
            std::vector<std::int64_t> d(static_cast<std::size_t>(n));
            for (auto& x : d) x = de(rng);
            const std::int64_t dbar = std::accumulate(d.begin(), d.end(), std::int64_t{0});
            if (std::gcd(static_cast<std::int64_t>(r), dbar) != 1) continue;
            const projective_complex X = build_band_complex(canonical_sequence(r, d), 9);
            if (hom_total(X, X) != 2) {
                detail = show(r, d);
                return false;
            }
            ++done;
        }
        return true;
    });

    criterion(7, "cone/extension telescoping", 30000.0, [](std::string& detail) {
        std::mt19937_64 rng(13);
        std::uniform_int_distribution<int> dn(1, 2), dr(2, 4);
        std::uniform_int_distribution<std::int64_t> de(-2, 2);
        int done = 0;
        while (done < 20) {
            const int n = dn(rng), r = dr(rng);
            std::vector<std::int64_t> d(static_cast<std::size_t>(n));
            for (auto& x : d) x = de(rng);
            const std::int64_t dbar = std::accumulate(d.begin(), d.end(), std::int64_t{0});
            if (std::gcd(static_cast<std::int64_t>(r), dbar) != 1) continue;
            const loop_matrix m = canonical_sequence(r, d);
            const extension_cone_result res = extension_cone(m, 3);
            if (!is_iso(res.cone_complex, build_band_complex(res.reduced, res.matched_lambda))) {
                detail = show(r, d) + ": cone mismatch";
                return false;
            }
            const auto tower = peel_tower(m);
            std::vector<std::int64_t> total(static_cast<std::size_t>(n), 0);
            for (const auto& v : tower)
                for (std::size_t i = 0; i < v.size(); ++i) total[i] += v[i];
            if (static_cast<int>(tower.size()) != r || total != d) {
                detail = show(r, d) + ": tower mismatch";
                return false;
            }
            ++done;
        }
        return true;
    });

    criterion(8, "twist consistency", 30000.0, [](std::string& detail) {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> dn(1, 2), dr(1, 3), dl(-2, 2);
        std::uniform_int_distribution<std::int64_t> de(-2, 2);
        int done = 0;
        while (done < 50) {
            const int n = dn(rng), r = dr(rng);
            loop_matrix m{n, r, {}};
            m.entries.resize(static_cast<std::size_t>(n) * r);
            for (auto& e : m.entries) e = de(rng);
            if (!is_primitive(m)) continue;
            std::uniform_int_distribution<int> dc(0, n - 1);
            const int i = dc(rng), l = dl(rng);
            const cyclic_walk w = walk_from_matrix(m);
            if (!walks_equivalent(apply_twist_step(w, {twist_step::generator::vert, i, l}),
                                  walk_from_matrix(twist_vertical(m, i, l)))) {
                detail = "vertical twist mismatch";
                return false;
            }
            const cyclic_walk pic = gamma_pic(n);
            const homology_class hw = homology_of(w), hd = homology_of(pic);
            const std::int64_t pr = homology_pairing(hw, hd);
            homology_class expect = hw;
            expect.rank += pr * hd.rank;
            for (int c = 0; c < n; ++c)
                expect.multidegree[static_cast<std::size_t>(c)] +=
                    pr * hd.multidegree[static_cast<std::size_t>(c)];
            expect.total_degree += pr * hd.total_degree;
            if (homology_of(twist_general(w, pic, 1)) != expect) {
                detail = "homology action mismatch";
                return false;
            }
            ++done;
        }
        // Twist pairs preserve intersection counts.
        std::mt19937_64 rng2(19);
        std::uniform_int_distribution<int> dr2(1, 3), dl2(-2, 2);
        std::uniform_int_distribution<std::int64_t> de2(-2, 2);
        int pairs = 0;
        while (pairs < 50) {
            const int n = 2;
            loop_matrix a{n, dr2(rng2), {}}, b{n, dr2(rng2), {}};
            a.entries.resize(static_cast<std::size_t>(n) * a.r);
            b.entries.resize(static_cast<std::size_t>(n) * b.r);
            for (auto& e : a.entries) e = de2(rng2);
            for (auto& e : b.entries) e = de2(rng2);
            if (!is_primitive(a) || !is_primitive(b) || matrices_equivalent(a, b)) continue;
            const int i = dl2(rng2) & 1, l = dl2(rng2);
            const loop_matrix ta = twist_vertical(a, i, l), tb_ = twist_vertical(b, i, l);
            if (matrices_equivalent(ta, tb_)) continue;
            if (intersections_cvb(a, b).count != intersections_cvb(ta, tb_).count) {
                detail = "twist changed an intersection count";
                return false;
            }
            ++pairs;
        }
        return true;
    });

    criterion(9, "normalize_to_pic transitivity", 30000.0, [](std::string& detail) {
        std::mt19937_64 rng(23);
        std::uniform_int_distribution<int> dn(1, 3), dr(1, 4), dl(-1, 1);
        std::uniform_int_distribution<std::int64_t> de(-3, 3);
        int done = 0;
        while (done < 50) {
            const int n = dn(rng), r = dr(rng);
            std::vector<std::int64_t> d(static_cast<std::size_t>(n));
            for (auto& x : d) x = de(rng);
            const std::int64_t dbar = std::accumulate(d.begin(), d.end(), std::int64_t{0});
            if (std::gcd(static_cast<std::int64_t>(r), dbar) != 1) continue;
            cyclic_walk w = walk_from_matrix(canonical_sequence(r, d));
            // A random extra vertical twist keeps the loop spherical.
            std::uniform_int_distribution<int> dc(0, n - 1);
            w = apply_twist_step(w, {twist_step::generator::vert, dc(rng), dl(rng)});
            const twist_word word = normalize_to_pic(w);
            if (!walks_equivalent(apply_twist_word(w, word), gamma_pic(n))) {
                detail = show(r, d);
                return false;
            }
            ++done;
        }
        return true;
    });

    criterion(10, "structural identities", 30000.0, [](std::string& detail) {
        for (int n = 1; n <= 5; ++n)
            if (dim_algebra(n) != 9 * n || dim_algebra_brute_force(n) != 9 * n) {
                detail = "dim_algebra mismatch at n=" + std::to_string(n);
                return false;
            }
        return for_coprime_range(3, 4, 3, [&](int, int r, const std::vector<std::int64_t>& d) {
            if (!check_d2(build_band_complex(canonical_sequence(r, d), 3))) {
                detail = "d^2 != 0 at " + show(r, d);
                return false;
            }
            return true;
        });
    });

    return failures;
}
