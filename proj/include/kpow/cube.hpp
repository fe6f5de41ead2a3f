/* n-cubes of pairwise commuting automorphisms, general binary n-cubes,
 * cube normalization and external products, and integer formal sums of
 * cubes. */
#ifndef KPOW_CUBE_HPP
#define KPOW_CUBE_HPP

#include "kpow/complexes.hpp"
#include "kpow/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace kpow {

/// Supplied (never computed) joint eigen-data: per-direction diagonal
/// tuples and a change-of-basis matrix with A_i = basis * diag_i *
/// basis^{-1}.
struct EigenData {
    std::vector<std::vector<Scalar>> diagonals;
    ExactMatrix basis;
};

/// The compact n-cube [P; A_1, ..., A_n]: a free module of the given rank
/// with n pairwise commuting automorphisms.
class Cube {
  public:
    Cube(FieldSpec field, std::size_t rank, std::vector<ExactMatrix> autos,
         std::optional<EigenData> eigen = std::nullopt);

    const FieldSpec& field() const { return field_; }
    std::size_t rank() const { return rank_; }
    std::size_t dims() const { return autos_.size(); }
    const std::vector<ExactMatrix>& autos() const { return autos_; }
    const std::optional<EigenData>& eigen() const { return eigen_; }

    bool operator==(const Cube& o) const;
    /// Canonical order on (field, rank, dimension, auto entries); eigen-data
    /// does not participate.
    bool operator<(const Cube& o) const;

    std::string str() const;

  private:
    FieldSpec field_;
    std::size_t rank_;
    std::vector<ExactMatrix> autos_;
    std::optional<EigenData> eigen_;
};

/// A binary multicomplex supported on {0,1}^n. Vertices are indexed by
/// bitmasks (bit i set = coordinate of direction i equals 1); edges in
/// direction i run from a vertex with bit i set to the vertex with bit i
/// cleared and carry a pair (top, bottom) of isomorphisms.
struct GeneralCube {
    FieldSpec field;
    std::size_t n = 0;
    std::vector<std::size_t> vertex_ranks;                    // size 2^n
    std::vector<std::map<std::size_t, ExactMatrix>> top_edges; // [dir][mask]
    std::vector<std::map<std::size_t, ExactMatrix>> bottom_edges;

    std::size_t vertices() const { return std::size_t{1} << n; }
    /// Shapes, invertibility of every edge, and commutation of all mixed
    /// squares in both binary flavors.
    void validate() const;
};

/// True iff the two differentials agree in at least one direction.
bool is_diagonal(const GeneralCube& g);

/// The n-cube with every vertex F^p and direction-i edges (A_i, 1).
GeneralCube cube_to_bincx(const Cube& c);

/// The 1-dimensional case as a binary complex pair (two-term, top A,
/// bottom identity). The cube must have dims() == 1.
BinaryComplexPair cube_to_complex_pair(const Cube& c);

struct NormalizedCube {
    Cube cube;
    /// Vertexwise isomorphism onto cube_to_bincx(cube), indexed by mask.
    std::vector<ExactMatrix> certificate;
};

/// Straightens a general n-cube to compact form by the recursive beta
/// trick: the top edge pair (alpha, beta) in the last direction is replaced
/// by (alpha * beta^{-1}, 1), conjugating by (beta, 1).
NormalizedCube normalize_cube(const GeneralCube& g);

/// Exact check that conjugating g by the certificate yields
/// cube_to_bincx(c).
bool verify_normalization(const GeneralCube& g, const NormalizedCube& nc);

/// External tensor product: rank p*q with autos
/// (A_1 (x) 1, ..., A_m (x) 1, 1 (x) B_1, ..., 1 (x) B_n). Eigen-data is
/// combined when both factors carry it.
Cube external_product(const Cube& x, const Cube& y);

/// Reorders the directions: direction i of the result is direction
/// sigma[i] of the input (sigma a permutation of 0..n-1).
Cube permute_directions(const Cube& c, const std::vector<std::size_t>& sigma);

/// Integer combination of canonicalized cubes. Zero coefficients and
/// rank-zero cubes are never stored.
class FormalSum {
  public:
    FormalSum() = default;

    void add(const Cube& c, long long coeff);
    FormalSum operator+(const FormalSum& o) const;
    FormalSum operator-(const FormalSum& o) const;
    FormalSum scaled(long long c) const;
    bool operator==(const FormalSum& o) const;
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const std::map<Cube, long long>& terms() const { return terms_; }

    std::string str() const;

  private:
    std::map<Cube, long long> terms_;
};

} // namespace kpow

#endif
