#include "doctest.h"

#include "kpow/matrix.hpp"
#include "kpow/random_gen.hpp"

using namespace kpow;

namespace {

const FieldSpec Q = FieldSpec::rationals();

ExactMatrix mat(FieldSpec f, std::size_t n, std::vector<long> e) {
    return ExactMatrix::from_ints(f, n, n, e);
}

/// Independent determinant oracle: cofactor expansion along the first row.
Scalar det_cofactor(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return Scalar::one(a.field());
    if (n == 1) return a.at(0, 0);
    Scalar acc = Scalar::zero(a.field());
    for (std::size_t j = 0; j < n; ++j) {
        ExactMatrix sub(a.field(), n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t col = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sub.at(i - 1, col++) = a.at(i, k);
            }
        }
        Scalar term = a.at(0, j) * det_cofactor(sub);
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

TEST_CASE("matmul basics") {
    ExactMatrix a = mat(Q, 2, {1, 2, 3, 4});
    CHECK(matmul(ExactMatrix::identity(Q, 2), a) == a);
    CHECK(matmul(a, mat(Q, 2, {0, 1, 1, 0})) == mat(Q, 2, {2, 1, 4, 3}));
    FieldSpec f5 = FieldSpec::prime(5);
    CHECK(matmul(mat(f5, 1, {2}), mat(f5, 1, {3})) == mat(f5, 1, {1}));
    CHECK_THROWS_AS(matmul(a, ExactMatrix::identity(Q, 3)), Error);
    CHECK_THROWS_AS(matmul(a, ExactMatrix::identity(FieldSpec::prime(5), 2)), Error);
}

TEST_CASE("determinant matches the cofactor oracle") {
    CHECK(det(ExactMatrix::identity(Q, 3)) == Scalar::one(Q));
    ExactMatrix a = mat(Q, 2, {1, 2, 3, 4});
    CHECK(det(a) == Scalar(Q, -2));
    CHECK(det(a) == det_cofactor(a));
    CHECK(det(mat(Q, 2, {2, 0, 0, 3})) == Scalar(Q, 6));
    CHECK_THROWS_AS(det(ExactMatrix::zero(Q, 2, 3)), Error);

    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
        ExactMatrix m = random_matrix(f, 3, 3, rng);
        CHECK(det(m) == det_cofactor(m));
    }
}

TEST_CASE("det is multiplicative") {
    Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix a = random_matrix(Q, 3, 3, rng);
        ExactMatrix b = random_matrix(Q, 3, 3, rng);
        CHECK(det(matmul(a, b)) == det(a) * det(b));
    }
}

TEST_CASE("kron") {
    ExactMatrix a = mat(Q, 2, {1, 2, 3, 4});
    CHECK(kron(a, ExactMatrix::identity(Q, 1)) == a);
    CHECK(kron(mat(Q, 1, {2}), mat(Q, 1, {3})) == mat(Q, 1, {6}));
    CHECK(kron(ExactMatrix::identity(Q, 2), ExactMatrix::identity(Q, 3)) ==
          ExactMatrix::identity(Q, 6));
}

TEST_CASE("kron associativity and determinant") {
    Rng rng(13);
    ExactMatrix a = random_matrix(Q, 2, 2, rng);
    ExactMatrix b = random_matrix(Q, 3, 3, rng);
    ExactMatrix c = random_matrix(Q, 2, 2, rng);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    // det(A (x) B) = det(A)^{cols B} det(B)^{cols A}
    CHECK(det(kron(a, b)) == det(a).pow(3) * det(b).pow(2));
}

TEST_CASE("compound") {
    CHECK(compound(ExactMatrix::identity(Q, 4), 2) == ExactMatrix::identity(Q, 6));
    CHECK(compound(mat(Q, 2, {1, 2, 3, 4}), 2) == mat(Q, 1, {-2}));
    ExactMatrix d = ExactMatrix::diagonal(
        Q, {Scalar(Q, 2), Scalar(Q, 3), Scalar(Q, 5)});
    ExactMatrix expect = ExactMatrix::diagonal(
        Q, {Scalar(Q, 6), Scalar(Q, 10), Scalar(Q, 15)});
    CHECK(compound(d, 2) == expect);
    CHECK_THROWS_AS(compound(d, 0), Error);
    // r beyond the size: empty index sets
    CHECK(compound(d, 4).rows() == 0);
    CHECK(compound(d, 4).cols() == 0);
}

TEST_CASE("compound functoriality") {
    Rng rng(14);
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t r = 1; r <= 3 && r <= n; ++r) {
            FieldSpec f = n % 2 ? Q : FieldSpec::prime(7);
            ExactMatrix a = random_invertible(f, n, rng);
            ExactMatrix b = random_invertible(f, n, rng);
            CHECK(compound(matmul(a, b), r) == matmul(compound(a, r), compound(b, r)));
        }
}

TEST_CASE("trace of compound equals elementary symmetric of eigenvalues") {
    ExactMatrix d = ExactMatrix::diagonal(
        Q, {Scalar(Q, 2), Scalar(Q, 3), Scalar(Q, 5)});
    // e_2(2,3,5) = 31, e_3 = 30
    CHECK(compound(d, 2).trace() == Scalar(Q, 31));
    CHECK(compound(d, 3).trace() == Scalar(Q, 30));
}

TEST_CASE("commute_check") {
    ExactMatrix d1 = ExactMatrix::diagonal(Q, {Scalar(Q, 2), Scalar(Q, 3)});
    ExactMatrix d2 = ExactMatrix::diagonal(Q, {Scalar(Q, 5), Scalar(Q, 7)});
    CHECK(commute_check({d1, d2}));
    ExactMatrix u = mat(Q, 2, {1, 1, 0, 1});
    ExactMatrix l = mat(Q, 2, {1, 0, 1, 1});
    CHECK(matmul(u, l) != matmul(l, u)); // direct product comparison
    CHECK_FALSE(commute_check({u, l}));
    CHECK_FALSE(commute_check({mat(Q, 2, {1, 1, 1, 1})}));
}

TEST_CASE("rref, kernel, solve, inverse") {
    Rng rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
        ExactMatrix a = random_matrix(f, 3, 5, rng);
        ExactMatrix k = kernel_basis(a);
        CHECK(k.cols() == 5 - rank(a));
        CHECK(matmul(a, k).is_zero());

        ExactMatrix inv_input = random_invertible(f, 3, rng);
        CHECK(matmul(inverse(inv_input), inv_input).is_identity());

        ExactMatrix x = random_matrix(f, 3, 2, rng);
        ExactMatrix b = matmul(inv_input, x);
        CHECK(solve(inv_input, b) == x);
    }
    CHECK_THROWS_AS(inverse(mat(Q, 2, {1, 1, 1, 1})), Error);
}

TEST_CASE("scalar parsing and arithmetic") {
    Scalar half = Scalar::parse(Q, "1/2");
    CHECK((half + half).is_one());
    CHECK(Scalar::parse(Q, "-3/6") == -half);
    FieldSpec f7 = FieldSpec::prime(7);
    CHECK(Scalar::parse(f7, "9") == Scalar(f7, 2));
    CHECK(Scalar::parse(f7, "1/2") == Scalar(f7, 4)); // 2^{-1} = 4 mod 7
    CHECK(Scalar(f7, 3).pow(-1) == Scalar(f7, 5));
    CHECK_THROWS_AS(Scalar::parse(Q, "x"), Error);
    CHECK_THROWS_AS(FieldSpec::prime(6), Error);
    CHECK_THROWS_AS(Scalar(Q, 1) + Scalar(f7, 1), Error);
}
