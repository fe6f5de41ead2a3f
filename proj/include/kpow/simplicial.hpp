/* Dold-Kan machinery at desk scale: Gamma (complex -> truncated simplicial
 * module), degreewise exterior powers, normalization by kernel
 * intersection, the simplicial tensor product, and the two-row double
 * complex of cross-effect columns. */
#ifndef KPOW_SIMPLICIAL_HPP
#define KPOW_SIMPLICIAL_HPP

#include "kpow/complexes.hpp"
#include "kpow/crosseffect.hpp"

#include <vector>

namespace kpow {

/// Simplicial module truncated at degree D. faces[n] holds d_0..d_n
/// (level n -> n-1, defined for 1 <= n <= D); degens[n] holds s_0..s_n
/// (level n -> n+1, defined for 0 <= n <= D-1).
struct TruncatedSimplicialModule {
    FieldSpec field;
    std::vector<std::size_t> dims;
    std::vector<std::vector<ExactMatrix>> faces;
    std::vector<std::vector<ExactMatrix>> degens;

    std::size_t truncation() const { return dims.empty() ? 0 : dims.size() - 1; }
    /// Checks all simplicial identities that fit under the truncation.
    bool satisfies_simplicial_identities() const;
};

/// Summand of Gamma(C)_n: the degree-k component placed along a monotone
/// surjection [n] ->> [k] (recorded by its value list).
struct GammaSummand {
    std::size_t k;
    std::vector<std::size_t> values;
    std::size_t offset;
};

struct GammaLayout {
    std::vector<std::vector<GammaSummand>> levels;
    /// Offset of the identity summand ([n] ->> [n]) at a level n within the
    /// support of the input complex.
    std::size_t identity_offset(std::size_t level) const;
};

/// Dold-Kan Gamma, truncated at degree D >= top degree of c.
TruncatedSimplicialModule gamma(const BoundedComplex& c, std::size_t D);
TruncatedSimplicialModule gamma(const BoundedComplex& c, std::size_t D,
                                GammaLayout& layout_out);

/// Applies the r-th exterior power to every level: dimensions become
/// binomials, faces and degeneracies become compounds.
TruncatedSimplicialModule apply_functor_degreewise(const TruncatedSimplicialModule& s,
                                                   std::size_t r);

/// Levelwise tensor product of two truncated simplicial modules.
TruncatedSimplicialModule levelwise_tensor(const TruncatedSimplicialModule& a,
                                           const TruncatedSimplicialModule& b);

struct NormalizedComplex {
    BoundedComplex complex;
    /// Kernel bases: bases[n] embeds N_n into level n (dims[n] x rank
    /// columns), chosen deterministically by echelon form.
    std::vector<ExactMatrix> bases;
};

/// N_n = intersection of ker d_1, ..., ker d_n with differential d_0
/// restricted to the chosen kernel bases. upto must stay below the
/// truncation bound.
NormalizedComplex normalize(const TruncatedSimplicialModule& s, std::size_t upto);

/// Restricts the d_0 maps of a second simplicial module (same underlying
/// dims and d_{i>=1}) to previously computed kernel bases; returns the
/// differentials of the restricted complex.
std::vector<ExactMatrix> restrict_to_bases(const TruncatedSimplicialModule& s,
                                           const std::vector<ExactMatrix>& bases);

/// N Lambda^r Gamma applied to a binary complex: both differentials are
/// pushed through the pipeline over one shared graded object (the kernel
/// bases do not depend on the differential).
BinaryComplexPair lambda_via_dold_kan(const BinaryComplexPair& pair, std::size_t r);

/// Two-row double complex with columns cr_i Lambda^r, i = 1..r, attached to
/// a map a: P -> Q viewed as a complex on [0,1]. Horizontal differentials
/// are not constructed; the comparison is by ranks and Euler
/// characteristic.
struct KoszulDoubleComplex {
    std::size_t r = 0;
    std::vector<std::size_t> top_ranks;    // cr_i Lambda^r(P,...,P), i = 1..r
    std::vector<std::size_t> bottom_ranks; // cr_i Lambda^r(Q,P,...,P)
    std::vector<ExactMatrix> verticals;    // cr_i Lambda^r(a, 1, ..., 1)
    std::vector<std::size_t> total_ranks;  // totalized, degrees 0..r
    long euler_characteristic = 0;
};

KoszulDoubleComplex koszul_double_complex(std::size_t r, const ExactMatrix& a);

/// Simplicial tensor product of two one-dimensional binary complexes:
/// N(Gamma(c) (x) Gamma(d)) for each differential, over one shared graded
/// object. upto must reach the sum of the supports.
BinaryComplexPair simplicial_tensor(const BinaryComplexPair& c,
                                    const BinaryComplexPair& d, std::size_t upto);

} // namespace kpow

#endif
