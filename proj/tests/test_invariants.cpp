#include "doctest.h"

#include "kpow/invariants.hpp"
#include "kpow/kops.hpp"
#include "kpow/random_gen.hpp"
#include "kpow/simplicial.hpp"

#include <algorithm>

using namespace kpow;

namespace {
const FieldSpec Q = FieldSpec::rationals();

Cube unit_cube(const Scalar& a) {
    FieldSpec f = a.field();
    EigenData e{{{a}}, ExactMatrix::identity(f, 1)};
    return Cube(f, 1, {ExactMatrix(f, 1, 1, {a})}, e);
}

Cube diag_cube(FieldSpec f, const std::vector<std::vector<Scalar>>& diagonals,
               std::size_t rank) {
    EigenData e{diagonals, ExactMatrix::identity(f, rank)};
    std::vector<ExactMatrix> autos;
    for (const auto& d : diagonals) autos.push_back(ExactMatrix::diagonal(f, d));
    return Cube(f, rank, std::move(autos), e);
}
} // namespace

TEST_CASE("unit representations over Q") {
    UnitRepr six = unit_repr(Scalar(Q, 6));
    CHECK(six.sign == 1);
    CHECK(six.exponents == std::map<std::int64_t, long long>{{2, 1}, {3, 1}});
    UnitRepr mh = unit_repr(Scalar::parse(Q, "-1/2"));
    CHECK(mh.sign == -1);
    CHECK(mh.exponents == std::map<std::int64_t, long long>{{2, -1}});
    CHECK_THROWS_AS(unit_repr(Scalar::zero(Q)), Error);
    // bound too small to certify the cofactor prime
    CHECK_THROWS_AS(unit_repr(Scalar(Q, 1000003), 10), Error);
    CHECK(unit_repr(Scalar(Q, 1000003)).exponents ==
          std::map<std::int64_t, long long>{{1000003, 1}});
}

TEST_CASE("unit representations over F_p") {
    FieldSpec f7 = FieldSpec::prime(7);
    CHECK(least_primitive_root(7) == 3);
    CHECK(unit_repr(Scalar(f7, 3)).dlog == 1);
    CHECK(unit_repr(Scalar(f7, 2)).dlog == 2); // 3^2 = 2 mod 7
    CHECK(unit_repr(Scalar(f7, 1)).dlog == 0);
}

TEST_CASE("torsion of two-term complexes") {
    Scalar a(Q, 5);
    CHECK(torsion(cube_to_complex_pair(unit_cube(a))) == a);
    // conjugated diag(2,3): torsion is the determinant 6
    ExactMatrix s = ExactMatrix::from_ints(Q, 2, 2, {1, 1, 0, 1});
    ExactMatrix d = ExactMatrix::diagonal(Q, {Scalar(Q, 2), Scalar(Q, 3)});
    ExactMatrix m = matmul(matmul(s, d), inverse(s));
    BinaryComplexPair pair{Q, {2, 2}, {m}, {ExactMatrix::identity(Q, 2)}};
    CHECK(torsion(pair) == Scalar(Q, 6));
}

TEST_CASE("torsion of diagonal complexes is 1") {
    Rng rng(71);
    BinaryComplexPair pair = random_acyclic_pair(Q, {2, 3, 1}, rng);
    BinaryComplexPair diag{Q, pair.ranks, pair.top, pair.top};
    CHECK(torsion(diag).is_one());
}

TEST_CASE("torsion equals det for random invertible matrices") {
    Rng rng(72);
    for (int trial = 0; trial < 8; ++trial) {
        FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
        std::size_t p = 1 + trial % 4;
        ExactMatrix a = random_invertible(f, p, rng);
        BinaryComplexPair pair{f, {p, p}, {a}, {ExactMatrix::identity(f, p)}};
        CHECK(torsion(pair) == det(a));
    }
}

TEST_CASE("torsion does not depend on the splitting choice") {
    Rng rng(73);
    for (int trial = 0; trial < 6; ++trial) {
        FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
        BinaryComplexPair pair = random_acyclic_pair(f, {2, 3, 1}, rng);
        Scalar reference = torsion(pair);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            std::vector<std::vector<std::size_t>> pref;
            for (std::size_t r : pair.ranks) {
                std::vector<std::size_t> order(r);
                for (std::size_t i = 0; i < r; ++i) order[i] = i;
                std::shuffle(order.begin(), order.end(), rng);
                pref.push_back(order);
            }
            CHECK(torsion(pair, pref) == reference);
        }
    }
}

TEST_CASE("torsion is invariant under determinant-1 isomorphisms") {
    Rng rng(74);
    BinaryComplexPair pair = random_acyclic_pair(Q, {1, 3, 2}, rng);
    Scalar reference = torsion(pair);
    // conjugate both differentials by shears (determinant 1) per degree
    std::vector<ExactMatrix> u;
    for (std::size_t r : pair.ranks) {
        ExactMatrix m = ExactMatrix::identity(Q, r);
        if (r >= 2) m.at(0, 1) = random_scalar(Q, rng);
        u.push_back(m);
    }
    BinaryComplexPair conj = pair;
    for (std::size_t k = 0; k + 1 < pair.ranks.size(); ++k) {
        conj.top[k] = matmul(matmul(u[k], pair.top[k]), inverse(u[k + 1]));
        conj.bottom[k] = matmul(matmul(u[k], pair.bottom[k]), inverse(u[k + 1]));
    }
    CHECK(torsion(conj) == reference);
}

TEST_CASE("torsion rejects non-acyclic input") {
    BinaryComplexPair zero_map{Q, {1, 1}, {ExactMatrix::zero(Q, 1, 1)},
                               {ExactMatrix::zero(Q, 1, 1)}};
    CHECK_THROWS_AS(torsion(zero_map), Error);
}

TEST_CASE("symbol of small cubes") {
    // [Q; 6] -> {2} + {3}
    SymbolElement s6 = symbol(unit_cube(Scalar(Q, 6)));
    SymbolElement expect6(Q, 1);
    expect6.add({2}, 1);
    expect6.add({3}, 1);
    CHECK(s6 == expect6);
    // [Q; 2, 3] -> 1 * (2, 3)
    Cube c23 = diag_cube(Q, {{Scalar(Q, 2)}, {Scalar(Q, 3)}}, 1);
    SymbolElement s23 = symbol(c23);
    SymbolElement expect23(Q, 2);
    expect23.add({2, 3}, 1);
    CHECK(s23 == expect23);
    // [Q; 4] -> 2 * {2}
    SymbolElement s4 = symbol(unit_cube(Scalar(Q, 4)));
    SymbolElement expect4(Q, 1);
    expect4.add({2}, 2);
    CHECK(s4 == expect4);
}

TEST_CASE("symbol torsion labels carry mod-2 coefficients") {
    SymbolElement s(Q, 1);
    s.add({-1}, 1);
    s.add({-1}, 1);
    CHECK(s.is_zero());
    FieldSpec f7 = FieldSpec::prime(7);
    SymbolElement t(f7, 1);
    t.add({3}, 6); // 6 = p - 1 = 0
    CHECK(t.is_zero());
}

TEST_CASE("symbol of lambda on a rank-1 two-cube") {
    Cube c23 = diag_cube(Q, {{Scalar(Q, 2)}, {Scalar(Q, 3)}}, 1);
    SymbolElement out = symbol_of_sum(lambda_cube(c23, 2).terms);
    SymbolElement expect(Q, 2);
    expect.add({2, 3}, -2); // multiplication by (-1)^{r-1} r^{n-1}
    CHECK(out == expect);
}

TEST_CASE("symbol of lambda^2 on [Q^2; diag(2,3)]") {
    Cube c = diag_cube(Q, {{Scalar(Q, 2), Scalar(Q, 3)}}, 2);
    SymbolElement out = symbol_of_sum(lambda_cube(c, 2).terms);
    SymbolElement expect(Q, 1);
    expect.add({2}, -1);
    expect.add({3}, -1);
    CHECK(out == expect);
    // torsion-compatible value 1/6
    UnitRepr collapsed = collapse_symbol(out);
    CHECK(collapsed == unit_repr(Scalar::parse(Q, "1/6")));
    CHECK(symbol_of_sum(FormalSum()).is_zero());
}

TEST_CASE("symbol collapses to the torsion unit for diagonalizable 1-cubes") {
    Rng rng(75);
    for (int trial = 0; trial < 6; ++trial) {
        FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
        std::vector<Scalar> units =
            f.is_rational() ? rational_unit_pool()
                            : std::vector<Scalar>{Scalar(f, 3), Scalar(f, 2), Scalar(f, 6)};
        Cube c = random_diagonalizable_cube(f, 1 + trial % 3, 1, rng, units);
        UnitRepr via_symbol = collapse_symbol(symbol(c));
        UnitRepr via_torsion = unit_repr(torsion(cube_to_complex_pair(c)));
        CHECK(via_symbol == via_torsion);
    }
}

TEST_CASE("symbol does not vanish on Steinberg pairs (documented caveat)") {
    // {a, 1-a} with a = 2: the symbol (2, -1) is nonzero at multilinear level
    Cube c = diag_cube(Q, {{Scalar(Q, 2)}, {Scalar(Q, -1)}}, 1);
    CHECK_FALSE(symbol(c).is_zero());
}

TEST_CASE("definitional check of the cube formula at n = 1") {
    Rng rng(76);
    for (int trial = 0; trial < 6; ++trial) {
        FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
        std::size_t p = 1 + trial % 3;
        std::size_t r = 1 + (trial / 2) % 3;
        ExactMatrix a = random_invertible(f, p, rng);
        BinaryComplexPair pair{f, {p, p}, {a}, {ExactMatrix::identity(f, p)}};
        Scalar dk_side = torsion(lambda_via_dold_kan(pair, r));
        Scalar formula_side = k1_value(lambda_cube(Cube(f, p, {a}), r).terms);
        CHECK(dk_side == formula_side);
    }
}

TEST_CASE("tensor product classes vanish in K_1") {
    Rng rng(77);
    for (int trial = 0; trial < 4; ++trial) {
        FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
        Scalar a = random_nonzero_scalar(f, rng, 1, 6);
        Scalar b = random_nonzero_scalar(f, rng, 1, 6);
        BinaryComplexPair ca = cube_to_complex_pair(unit_cube(a));
        BinaryComplexPair cb = cube_to_complex_pair(unit_cube(b));
        BinaryComplexPair prod = simplicial_tensor(ca, cb, 2);
        CHECK(is_acyclic(prod));
        CHECK(torsion(prod).is_one());
    }
}
