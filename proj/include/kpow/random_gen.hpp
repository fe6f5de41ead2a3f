/* Seeded random objects for the verification suites and property tests. */
#ifndef KPOW_RANDOM_GEN_HPP
#define KPOW_RANDOM_GEN_HPP

#include "kpow/complexes.hpp"
#include "kpow/cube.hpp"

#include <random>

namespace kpow {

using Rng = std::mt19937_64;

/// A scalar with small integer value in [lo, hi] (reduced over F_p).
Scalar random_scalar(FieldSpec f, Rng& rng, long lo = -3, long hi = 3);
Scalar random_nonzero_scalar(FieldSpec f, Rng& rng, long lo = -3, long hi = 3);

ExactMatrix random_matrix(FieldSpec f, std::size_t rows, std::size_t cols, Rng& rng,
                          long lo = -3, long hi = 3);

/// Rejection-samples small-entry matrices until invertible.
ExactMatrix random_invertible(FieldSpec f, std::size_t n, Rng& rng, long lo = -2,
                              long hi = 2);

/// A commuting invertible tuple built from polynomials in one matrix.
std::vector<ExactMatrix> random_commuting_tuple(FieldSpec f, std::size_t rank,
                                                std::size_t n, Rng& rng);

/// A cube with supplied eigen-data: random basis conjugating random
/// diagonal tuples drawn from the given unit pool.
Cube random_diagonalizable_cube(FieldSpec f, std::size_t rank, std::size_t n, Rng& rng,
                                const std::vector<Scalar>& units);

/// The standard pool {2, 3, 5, -1, 1/2} of rational units.
std::vector<Scalar> rational_unit_pool();

/// A cube without eigen-data (commuting tuple from polynomials in one
/// matrix).
Cube random_cube(FieldSpec f, std::size_t rank, std::size_t n, Rng& rng);

/// Conjugates a compact cube by random vertexwise isomorphisms, producing a
/// general binary n-cube whose edges have no identity components.
GeneralCube random_general_cube(FieldSpec f, std::size_t rank, std::size_t n, Rng& rng);

/// An acyclic binary complex pair on the given ranks: both differentials
/// are random based acyclic structures on the same graded object. The rank
/// vector must admit an acyclic complex (alternating partial sums
/// nonnegative, total alternating sum zero).
BinaryComplexPair random_acyclic_pair(FieldSpec f, const std::vector<std::size_t>& ranks,
                                      Rng& rng);

/// A bounded complex (d*d = 0) with the given ranks, not necessarily exact.
BoundedComplex random_bounded_complex(FieldSpec f, const std::vector<std::size_t>& ranks,
                                      Rng& rng);

} // namespace kpow

#endif
