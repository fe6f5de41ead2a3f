#include "doctest.h"

#include "kpow/invariants.hpp"
#include "kpow/kops.hpp"
#include "kpow/random_gen.hpp"

using namespace kpow;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("lambda of a cube, r = 2 structure") {
    Rng rng(51);
    Cube c = random_cube(Q, 3, 2, rng);
    const ExactMatrix &a1 = c.autos()[0], &a2 = c.autos()[1];
    LambdaOutput out = lambda_cube(c, 2);
    REQUIRE(out.per_degree.size() == 2);
    REQUIRE(out.per_degree[0].has_value());
    REQUIRE(out.per_degree[1].has_value());
    // [Lambda^2 P; Lambda^2 A_1, Lambda^2 A_2] - [P (x) P; A_1 (x) 1, A_2 (x) A_2]
    const Cube& t1 = *out.per_degree[0];
    CHECK(t1.rank() == 3);
    CHECK(t1.autos()[0] == compound(a1, 2));
    CHECK(t1.autos()[1] == compound(a2, 2));
    const Cube& t2 = *out.per_degree[1];
    CHECK(t2.rank() == 9);
    CHECK(t2.autos()[0] == kron(a1, ExactMatrix::identity(Q, 3)));
    CHECK(t2.autos()[1] == kron(a2, a2));
    CHECK(out.terms.terms().at(t1) == 1);
    CHECK(out.terms.terms().at(t2) == -1);
}

TEST_CASE("lambda of a cube, r = 3 has the four-term shape") {
    Rng rng(52);
    Cube c = random_cube(Q, 2, 2, rng);
    const ExactMatrix &a1 = c.autos()[0], &a2 = c.autos()[1];
    LambdaOutput out = lambda_cube(c, 3);
    REQUIRE(out.per_degree.size() == 3);
    // i = 2 assembles the two displayed middle cubes as one block sum:
    // [L^2 P (x) P; L^2 A_1 (x) 1, ...] and [P (x) L^2 P; A_1 (x) 1, ...]
    const Cube& mid = *out.per_degree[1];
    ExactMatrix id2 = ExactMatrix::identity(Q, 2);
    ExactMatrix expect_b1 = direct_sum(kron(compound(a1, 2), id2),
                                       kron(a1, ExactMatrix::identity(Q, 1)));
    ExactMatrix expect_b2 =
        direct_sum(kron(compound(a2, 2), a2), kron(a2, compound(a2, 2)));
    CHECK(mid.autos()[0] == expect_b1);
    CHECK(mid.autos()[1] == expect_b2);
    CHECK(out.terms.terms().at(mid) == -1);
    // i = 3: [P (x) P (x) P; A_1 (x) 1 (x) 1, A_2 (x) A_2 (x) A_2]
    const Cube& last = *out.per_degree[2];
    CHECK(last.rank() == 8);
    CHECK(last.autos()[0] == kron(a1, ExactMatrix::identity(Q, 4)));
    CHECK(last.autos()[1] == kron(a2, kron(a2, a2)));
}

TEST_CASE("lambda of a rank-1 cube keeps only the top cross effect") {
    Scalar a1(Q, 2), a2(Q, 3), a3(Q, 5);
    EigenData e{{{a1}, {a2}, {a3}}, ExactMatrix::identity(Q, 1)};
    Cube c(Q, 1,
           {ExactMatrix(Q, 1, 1, {a1}), ExactMatrix(Q, 1, 1, {a2}),
            ExactMatrix(Q, 1, 1, {a3})},
           e);
    for (std::size_t r = 2; r <= 4; ++r) {
        LambdaOutput out = lambda_cube(c, r);
        REQUIRE(out.terms.size() == 1);
        const auto& [term, coeff] = *out.terms.terms().begin();
        CHECK(coeff == (r % 2 == 1 ? 1 : -1));
        CHECK(term.rank() == 1);
        // (-1)^{r-1} [P^{(x) r}; a_1, a_2^r, a_3^r]
        CHECK(term.autos()[0].at(0, 0) == a1);
        CHECK(term.autos()[1].at(0, 0) == a2.pow(static_cast<long>(r)));
        CHECK(term.autos()[2].at(0, 0) == a3.pow(static_cast<long>(r)));
    }
}

namespace {

/// Brute-force composition sum, independent of CrossEffectLayout: walks all
/// tuples (j_1, ..., j_i) of positive integers summing to r.
long long brute_cross_effect_rank(std::size_t r, std::size_t i, std::size_t p) {
    if (i == 0) return r == 0 ? 1 : 0;
    long long acc = 0;
    for (std::size_t j = 1; j + (i - 1) <= r; ++j)
        acc += static_cast<long long>(binomial(p, j)) *
               brute_cross_effect_rank(r - j, i - 1, p);
    return acc;
}

} // namespace

TEST_CASE("lambda rank accounting") {
    // sum_i (-1)^{i-1} rank cr_i Lambda^r(P, ..., P) = (-1)^{r-1} C(p+r-1, r),
    // the rank bookkeeping of the reduced alternating-sum formula (the
    // x^r coefficient of 1 - (1+x)^{-p})
    for (std::size_t p = 1; p <= 6; ++p)
        for (std::size_t r = 1; r <= 4; ++r) {
            long long acc = 0;
            for (std::size_t i = 1; i <= r; ++i) {
                auto l = cross_effect_ranks(r, i, std::vector<std::size_t>(i, p));
                CHECK(static_cast<long long>(l.total_rank) ==
                      brute_cross_effect_rank(r, i, p));
                acc += (i % 2 == 1 ? 1 : -1) * static_cast<long long>(l.total_rank);
            }
            long long closed = static_cast<long long>(binomial(p + r - 1, r));
            CHECK(acc == (r % 2 == 1 ? closed : -closed));
        }
}

TEST_CASE("lambda output matrices commute and propagate eigen-data") {
    Rng rng(53);
    Cube c = random_diagonalizable_cube(Q, 2, 2, rng, rational_unit_pool());
    for (std::size_t r = 1; r <= 3; ++r) {
        LambdaOutput out = lambda_cube(c, r);
        for (const auto& [term, coeff] : out.terms.terms()) {
            CHECK(commute_check(term.autos()));
            CHECK(term.eigen().has_value()); // validated by the Cube constructor
        }
    }
}

TEST_CASE("lambda_general_cube agrees with lambda_cube on compact input") {
    Rng rng(54);
    for (int trial = 0; trial < 6; ++trial) {
        FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
        std::size_t n = 1 + trial % 3;
        Cube c = random_cube(f, 2, n, rng);
        for (std::size_t r = 1; r <= 3; ++r) {
            FormalSum via_general = lambda_general_cube(cube_to_bincx(c), r);
            CHECK(via_general == lambda_cube(c, r).terms);
        }
    }
}

TEST_CASE("lambda_general_cube at n = 1, r = 1 is the cube itself") {
    Rng rng(55);
    GeneralCube g = random_general_cube(Q, 2, 1, rng);
    NormalizedCube nc = normalize_cube(g);
    FormalSum s = lambda_general_cube(g, 1);
    REQUIRE(s.size() == 1);
    CHECK(s.terms().begin()->first == nc.cube);
    CHECK(s.terms().begin()->second == 1);
}

TEST_CASE("cross_effect_cube vertices follow the first-coordinate rule") {
    Rng rng(56);
    GeneralCube g = random_general_cube(Q, 2, 3, rng);
    const std::size_t p = 2;
    for (std::size_t i = 1; i <= 3; ++i) {
        GeneralCube ci = cross_effect_cube(g, 3, i);
        ci.validate();
        std::vector<std::size_t> same(i, p);
        for (std::size_t mask = 0; mask < ci.vertices(); ++mask)
            CHECK(ci.vertex_ranks[mask] == cross_effect_ranks(3, i, same).total_rank);
    }
}

TEST_CASE("adams") {
    Rng rng(57);
    Cube c = random_cube(Q, 2, 1, rng);
    // r = 1: the cube itself with coefficient 1
    FormalSum a1 = adams(c, 1);
    REQUIRE(a1.size() == 1);
    CHECK(a1.terms().begin()->first == c);
    CHECK(a1.terms().begin()->second == 1);
    // psi^2 on K_1 squares the determinant invariant
    FormalSum a2 = adams(c, 2);
    Scalar expect = det(c.autos()[0]).pow(2);
    CHECK(k1_value(a2) == expect);
}

TEST_CASE("hiller r = 1") {
    Rng rng(58);
    ExactMatrix a = random_invertible(Q, 2, rng);
    HillerOutput h = hiller_lambda(2, a, 1);
    // [P; A] - [P; 1]
    FormalSum expect;
    expect.add(Cube(Q, 2, {a}), 1);
    expect.add(Cube(Q, 2, {ExactMatrix::identity(Q, 2)}), -1);
    CHECK(h.raw == expect);
    FormalSum reduced_expect;
    reduced_expect.add(Cube(Q, 2, {a}), 1);
    CHECK(h.reduced == reduced_expect);
    REQUIRE(h.dropped.size() == 1);
    CHECK(h.dropped[0].autos()[0].is_identity());
}

TEST_CASE("hiller r = 2 reduced") {
    Rng rng(59);
    ExactMatrix a = random_invertible(Q, 3, rng);
    HillerOutput h = hiller_lambda(3, a, 2);
    FormalSum expect;
    expect.add(Cube(Q, 3, {compound(a, 2)}), 1);
    expect.add(Cube(Q, 9, {kron(a, ExactMatrix::identity(Q, 3))}), -1);
    CHECK(h.reduced == expect);
}

TEST_CASE("hiller reduced equals lambda for 1-cubes") {
    Rng rng(60);
    for (int trial = 0; trial < 8; ++trial) {
        FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
        std::size_t p = 1 + trial % 3;
        ExactMatrix a = random_invertible(f, p, rng);
        Cube c(f, p, {a});
        for (std::size_t r = 1; r <= 4; ++r) {
            HillerOutput h = hiller_lambda(p, a, r);
            CHECK(h.reduced == lambda_cube(c, r).terms);
            for (const Cube& dropped : h.dropped)
                CHECK(torsion(cube_to_complex_pair(dropped)).is_one());
        }
    }
}

TEST_CASE("external product of formal sums is bilinear") {
    Rng rng(61);
    Cube c1 = random_cube(Q, 2, 1, rng);
    Cube c2 = random_cube(Q, 2, 1, rng);
    Cube d = random_cube(Q, 2, 1, rng);
    FormalSum s1, s2, sd;
    s1.add(c1, 1);
    s2.add(c2, 1);
    sd.add(d, 1);
    FormalSum lhs = external_product_sum(s1 + s2, sd);
    FormalSum rhs = external_product_sum(s1, sd) + external_product_sum(s2, sd);
    CHECK(lhs == rhs);
    FormalSum neg = external_product_sum(s1.scaled(-1), sd);
    CHECK(neg == external_product_sum(s1, sd).scaled(-1));
    FormalSum single = external_product_sum(s1, sd);
    REQUIRE(single.size() == 1);
    CHECK(single.terms().begin()->first == external_product(c1, d));
}
