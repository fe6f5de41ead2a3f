/* Cross-effects of the exterior power functor as explicit direct sums over
 * compositions, plus trace-level character functions. */
#ifndef KPOW_CROSSEFFECT_HPP
#define KPOW_CROSSEFFECT_HPP

#include "kpow/matrix.hpp"

#include <cstddef>
#include <vector>

namespace kpow {

/// Ordered tuple of positive integers.
struct Composition {
    std::vector<std::size_t> parts;
    bool operator==(const Composition& o) const { return parts == o.parts; }
    std::string str() const;
};

/// Compositions of r into i positive parts, in descending lexicographic
/// order: (r-i+1, 1, ..., 1) first, (1, ..., 1, r-i+1) last. Empty when
/// i > r or i == 0.
std::vector<Composition> compositions_of(std::size_t r, std::size_t i);

/// Block layout of cr_i Lambda^r(P_1, ..., P_i) as the direct sum over
/// compositions (j_1, ..., j_i) of Lambda^{j_1}(P_1) (x) ... (x)
/// Lambda^{j_i}(P_i).
struct CrossEffectLayout {
    std::size_t r = 0;
    std::size_t arity = 0;
    std::vector<Composition> blocks;
    std::vector<std::size_t> block_ranks; // per block, for the given ranks
    std::vector<std::size_t> offsets;     // starting index of each block
    std::size_t total_rank = 0;
};

CrossEffectLayout cross_effect_ranks(std::size_t r, std::size_t i,
                                     const std::vector<std::size_t>& ranks);

/// cr_i Lambda^r applied to an i-tuple of maps: the block-diagonal matrix
/// with block kron(compound(M_1, j_1), ..., compound(M_i, j_i)) per
/// composition, in layout order. Maps may be rectangular.
ExactMatrix cross_effect_map(std::size_t r, std::size_t i,
                             const std::vector<ExactMatrix>& maps);

/// Trace of compound(a, k): the k-th elementary symmetric function of the
/// eigenvalues. Zero for k > size.
Scalar char_e(const ExactMatrix& a, std::size_t k);

/// Character-level Cauchy identity: char_e(kron(a,b), r) equals
/// sum over |mu| = r of s_mu(a) * s_{mu~}(b), with s_mu evaluated at
/// X_k = char_e(., k).
bool verify_cauchy_character(const ExactMatrix& a, const ExactMatrix& b, std::size_t r);

} // namespace kpow

#endif
