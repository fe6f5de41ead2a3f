/* Bounded chain complexes and binary complexes (one graded object, two
 * differentials). */
#ifndef KPOW_COMPLEXES_HPP
#define KPOW_COMPLEXES_HPP

#include "kpow/matrix.hpp"

#include <vector>

namespace kpow {

/// Chain complex supported on degrees 0..d. diffs[k] is the differential
/// from degree k+1 to degree k, of shape ranks[k] x ranks[k+1].
struct BoundedComplex {
    FieldSpec field;
    std::vector<std::size_t> ranks;
    std::vector<ExactMatrix> diffs;

    std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    void validate() const; // shapes and d*d = 0
};

/// Two differentials on one graded object; both (ranks, top) and
/// (ranks, bottom) are complexes. Acyclicity is a predicate, not an
/// invariant of the type.
struct BinaryComplexPair {
    FieldSpec field;
    std::vector<std::size_t> ranks;
    std::vector<ExactMatrix> top;
    std::vector<ExactMatrix> bottom;

    std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    BoundedComplex top_complex() const { return {field, ranks, top}; }
    BoundedComplex bottom_complex() const { return {field, ranks, bottom}; }
    void validate() const;
};

/// Exactness in every degree, for one differential: d*d = 0 together with
/// rank d_{k+1} + rank d_k = dim_k.
bool is_exact(const BoundedComplex& c);

/// True iff both differentials of the pair are exact everywhere.
bool is_acyclic(const BinaryComplexPair& c);

/// True iff the two differentials coincide entrywise.
bool is_diagonal(const BinaryComplexPair& c);

} // namespace kpow

#endif
