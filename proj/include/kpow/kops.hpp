/* Exterior power and Adams operations on cube representatives, and the
 * alternating-sum formula on automorphism classes. */
#ifndef KPOW_KOPS_HPP
#define KPOW_KOPS_HPP

#include "kpow/crosseffect.hpp"
#include "kpow/cube.hpp"

#include <optional>

namespace kpow {

/// Signed sum of cross-effect cubes: term i carries
/// B_1 = cr_i Lambda^r(A_1, 1, ..., 1), B_j = cr_i Lambda^r(A_j, ..., A_j)
/// with coefficient (-1)^{i-1}. Terms of rank zero are omitted.
struct LambdaOutput {
    std::size_t r = 0;
    FormalSum terms;
    /// The full list i = 1..r; entries without surviving rank are empty.
    std::vector<std::optional<Cube>> per_degree;
};

LambdaOutput lambda_cube(const Cube& c, std::size_t r);

/// Variant with the distinguished (A, 1, ..., 1) slot moved to the given
/// direction; direction 0 reproduces lambda_cube.
LambdaOutput lambda_cube_distinguished(const Cube& c, std::size_t r,
                                       std::size_t direction);

/// The i-th cross-effect cube of a general n-cube: vertex at mask uses the
/// vertex alone when the first coordinate is 1 and the mixed tuple with the
/// first-coordinate-1 neighbour when it is 0; edges apply cr_i Lambda^r to
/// the matching tuples of binary isomorphisms.
GeneralCube cross_effect_cube(const GeneralCube& g, std::size_t r, std::size_t i);

struct GeneralLambdaTerm {
    std::size_t i;
    GeneralCube raw;
    NormalizedCube normalized;
};

struct GeneralLambdaOutput {
    std::size_t r = 0;
    FormalSum sum;
    std::vector<GeneralLambdaTerm> terms;
};

/// Exterior power of an arbitrary n-cube: builds each cross-effect cube,
/// straightens it to compact form, and returns the signed sum.
GeneralLambdaOutput lambda_general_cube_full(const GeneralCube& g, std::size_t r);
FormalSum lambda_general_cube(const GeneralCube& g, std::size_t r);

/// Adams operation: (-1)^{r-1} r times the exterior power.
FormalSum adams(const Cube& c, std::size_t r);

/// The alternating sum over tuples (a, b_1, ..., b_u), a >= 0, b_k >= 1,
/// a + sum b_k = r, of the 1-cubes
/// (Lambda^a P (x) Lambda^{b_1} P (x) ..., Lambda^a A (x) 1 (x) ...) with
/// sign (-1)^u. Raw keeps the a = 0 terms; reduced drops them and regroups
/// by i = u + 1 into the cross-effect block layout.
struct HillerOutput {
    FormalSum raw;
    FormalSum reduced;
    std::vector<Cube> dropped; // the a = 0 cubes (identity automorphisms)
};

HillerOutput hiller_lambda(std::size_t rank, const ExactMatrix& a, std::size_t r);

/// Bilinear extension of the external product.
FormalSum external_product_sum(const FormalSum& x, const FormalSum& y);

} // namespace kpow

#endif
