#include <doctest.h>

#include <numeric>
#include <random>

#include "test_helpers.hpp"
#include "torusband/intersections.hpp"
#include "torusband/sequences.hpp"

using namespace tb;
using namespace tbt;

TEST_CASE("intersections_cvb determinant cases") {
    CHECK(intersections_cvb(mat(1, 1, {2}), mat(1, 1, {0})).count == 2);
    CHECK(intersections_cvb(canonical_sequence(1, {1}), canonical_sequence(1, {0})).count == 1);
    CHECK(intersections_cvb(canonical_sequence(2, {2, -1}), canonical_sequence(1, {0, 0})).count == 1);
}

TEST_CASE("intersections_cvb is symmetric") {
    const loop_matrix a = canonical_sequence(3, {2, -1});
    const loop_matrix b = canonical_sequence(2, {1, 2});
    CHECK(intersections_cvb(a, b).count == intersections_cvb(b, a).count);
}

TEST_CASE("intersections_cvb rejects homotopic inputs") {
    const loop_matrix a = mat(2, 2, {1, -1, 1, 0});
    CHECK_THROWS_AS(intersections_cvb(a, rotate_rows(a, 1)), homotopic_inputs);
}

TEST_CASE("self_intersections of canonical sequences vanish") {
    CHECK(self_intersections(canonical_sequence(2, {2, -1})).count == 0);
    CHECK(self_intersections(mat(1, 1, {2})).count == 0);
    CHECK(self_intersections(mat(1, 5, {0, 0, 1, 1, 0})).count >= 1);
}

TEST_CASE("serial and parallel sweeps agree") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> de(-2, 2);
    int done = 0;
    while (done < 15) {
        loop_matrix a = mat(2, 3, {0, 0, 0, 0, 0, 0});
        loop_matrix b = a;
        for (auto& e : a.entries) e = de(rng);
        for (auto& e : b.entries) e = de(rng);
        if (!is_primitive(a) || !is_primitive(b) || matrices_equivalent(a, b)) continue;
        CHECK(intersections_cvb(a, b, exec_policy::serial).count ==
              intersections_cvb(a, b, exec_policy::parallel).count);
        CHECK(self_intersections(a, exec_policy::serial).count ==
              self_intersections(a, exec_policy::parallel).count);
        ++done;
    }
}

TEST_CASE("general walk intersections: seed checks") {
    CHECK(intersections_general(gamma_pic(2), kappa_loop(2, 0)).count == 1);
    CHECK(intersections_general(gamma_pic(2), kappa_loop(2, 1)).count == 1);
    CHECK(intersections_general(kappa_loop(2, 0), kappa_loop(2, 1)).count == 0);
    CHECK(intersections_general(kappa_loop(1, 0), walk_from_matrix(mat(1, 1, {2}))).count == 1);
}

TEST_CASE("general walk intersections agree with the matrix sweep") {
    const std::vector<std::pair<loop_matrix, loop_matrix>> samples = {
        {mat(1, 1, {2}), mat(1, 1, {0})},
        {canonical_sequence(2, {2, -1}), canonical_sequence(1, {0, 0})},
        {canonical_sequence(3, {1, 1}), canonical_sequence(2, {0, 1})},
        {canonical_sequence(2, {3}), canonical_sequence(3, {-1})},
    };
    for (const auto& [a, b] : samples) {
        CHECK(intersections_general(walk_from_matrix(a), walk_from_matrix(b)).count ==
              intersections_cvb(a, b).count);
    }
}

TEST_CASE("self_intersections_general") {
    CHECK(self_intersections_general(gamma_pic(2)) == 0);
    CHECK(self_intersections_general(kappa_loop(1, 0)) == 0);
    CHECK(self_intersections_general(walk_from_matrix(canonical_sequence(2, {2, -1}))) == 0);
    CHECK(self_intersections_general(walk_from_matrix(mat(1, 5, {0, 0, 1, 1, 0}))) >= 1);
}

TEST_CASE("classify_spherical") {
    CHECK(classify_spherical(walk_from_matrix(canonical_sequence(2, {2, -1}))) ==
          spherical_class::spherical);
    CHECK(classify_spherical(walk(1, {eps(0), kap(0), eps(0), kap(0)})) ==
          spherical_class::not_primitive);
    CHECK(classify_spherical(puncture_loop(1)) == spherical_class::separating);
    CHECK(classify_spherical(walk_from_matrix(mat(1, 5, {0, 0, 1, 1, 0}))) ==
          spherical_class::not_simple);
}

TEST_CASE("canonical sequences are spherical across the desk range") {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 4; ++r)
            for (std::int64_t d0 = -3; d0 <= 3; ++d0) {
                std::vector<std::int64_t> d(static_cast<std::size_t>(n), 0);
                d[0] = d0;
                if (std::gcd(static_cast<std::int64_t>(r), d0) != 1) continue;
                CHECK(classify_spherical(walk_from_matrix(canonical_sequence(r, d))) ==
                      spherical_class::spherical);
            }
}
