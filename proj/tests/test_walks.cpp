#include <doctest.h>

#include "test_helpers.hpp"
#include "torusband/sequences.hpp"
#include "torusband/walks.hpp"

using namespace tb;
using namespace tbt;

TEST_CASE("reduce_walk cancels adjacent inverses") {
    const cyclic_walk w = walk(1, {eps(0, 1), eps(0, -1), kap(0, 1)});
    CHECK(w.letters == std::vector<letter>{kap(0, 1)});
}

TEST_CASE("reduce_walk keeps reduced words") {
    const cyclic_walk w = walk(2, {eps(0), eps(1)});
    CHECK(w.letters.size() == 2);
}

TEST_CASE("reduce_walk rejects contractible loops") {
    CHECK_THROWS_AS(walk(1, {kap(0, 1), kap(0, -1)}), contractible_loop);
}

TEST_CASE("reduce_walk rejects non-composable words") {
    CHECK_THROWS_AS(walk(2, {eps(0), eps(0)}), not_composable);
}

TEST_CASE("walks_equivalent under rotation and inversion") {
    CHECK(walks_equivalent(walk(2, {eps(0), eps(1)}), walk(2, {eps(1), eps(0)})));
    CHECK(walks_equivalent(walk(1, {eps(0), kap(0)}), walk(1, {kap(0, -1), eps(0, -1)})));
    CHECK_FALSE(walks_equivalent(kappa_loop(1, 0), gamma_pic(1)));
}

TEST_CASE("walk primitivity") {
    CHECK(is_primitive(walk(1, {eps(0), kap(0)})));
    CHECK_FALSE(is_primitive(walk(1, {eps(0), kap(0), eps(0), kap(0)})));
    CHECK(is_primitive(walk_from_matrix(canonical_sequence(2, {2, -1}))));
}

TEST_CASE("is_cvb") {
    CHECK(is_cvb(gamma_pic(3)));
    CHECK_FALSE(is_cvb(kappa_loop(2, 1)));
    CHECK_FALSE(is_cvb(walk(1, {eps(0, 1), kap(0, 1), eps(0, -1), kap(0, 1)})));
}

TEST_CASE("matrix_from_walk on basic loops") {
    const loop_matrix pic = matrix_from_walk(gamma_pic(2));
    CHECK(pic.r == 1);
    CHECK(pic.entries == std::vector<std::int64_t>{0, 0});

    // eps_0 kappa_0 eps_1 kappa_1^{-1} eps_0 kappa_0 eps_1, n = 2
    const cyclic_walk w = walk(
        2, {eps(0), kap(0), eps(1), kap(1, -1), eps(0), kap(0), eps(1)});
    const loop_matrix m = matrix_from_walk(w);
    CHECK(m.r == 2);
    CHECK(matrices_equivalent(m, mat(2, 2, {1, -1, 1, 0})));

    const loop_matrix k3 = matrix_from_walk(walk(1, {eps(0), kap(0), kap(0), kap(0)}));
    CHECK(k3.r == 1);
    CHECK(k3.entries == std::vector<std::int64_t>{3});
}

TEST_CASE("walk/matrix round trip") {
    const loop_matrix m = canonical_sequence(3, {2, -1, 1});
    CHECK(matrix_from_walk(walk_from_matrix(m)) == m);
}

TEST_CASE("homology classes") {
    const homology_class pic = homology_of(gamma_pic(2));
    CHECK(pic.rank == 1);
    CHECK(pic.multidegree == std::vector<std::int64_t>{0, 0});

    const homology_class k = homology_of(kappa_loop(2, 1));
    CHECK(k.rank == 0);
    CHECK(k.multidegree == std::vector<std::int64_t>{0, 1});

    const homology_class b = homology_of(canonical_sequence(2, {2, -1}));
    CHECK(b.rank == 2);
    CHECK(b.multidegree == std::vector<std::int64_t>{2, -1});
    CHECK(b.total_degree == 1);
}

TEST_CASE("is_non_separating") {
    CHECK(is_non_separating(gamma_pic(2), true));
    CHECK(is_non_separating(kappa_loop(1, 0), true));
    CHECK_FALSE(is_non_separating(puncture_loop(1), true));
}

TEST_CASE("column contraction") {
    const loop_matrix m = mat(2, 2, {1, -1, 1, 0});
    const loop_matrix c = contract(m, 0);
    CHECK(c.n == 1);
    CHECK(c.r == 2);
    CHECK(matrices_equivalent(c, canonical_sequence(2, {1})));

    const loop_matrix z = contract(mat(2, 2, {0, 0, 0, 0}), 0);
    CHECK(z.entries == std::vector<std::int64_t>{0, 0});

    CHECK_THROWS_AS(contract(mat(2, 2, {1, 0, 0, 0}), 1), domain_error);
}

TEST_CASE("matrix primitivity and equivalence") {
    CHECK(is_primitive(mat(1, 2, {1, 0})));
    CHECK_FALSE(is_primitive(mat(1, 2, {1, 1})));
    CHECK(matrices_equivalent(mat(2, 2, {1, -1, 1, 0}), mat(2, 2, {1, 0, 1, -1})));
    CHECK_FALSE(matrices_equivalent(mat(2, 2, {1, -1, 1, 0}), mat(2, 2, {1, 1, 1, 0})));
}
