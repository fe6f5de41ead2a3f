#include "kpow/complexes.hpp"

namespace kpow {

namespace {

void validate_diffs(FieldSpec field, const std::vector<std::size_t>& ranks,
                    const std::vector<ExactMatrix>& diffs) {
    check(!ranks.empty(), "complex needs at least degree 0");
    check(diffs.size() + 1 == ranks.size(), "complex needs one differential per step");
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        check(diffs[k].field() == field, "differential in the wrong field");
        check(diffs[k].rows() == ranks[k] && diffs[k].cols() == ranks[k + 1],
              "differential shape does not match ranks");
        if (k + 1 < diffs.size())
            check(matmul(diffs[k], diffs[k + 1]).is_zero(),
                  "consecutive differentials do not compose to zero");
    }
}

} // namespace

void BoundedComplex::validate() const { validate_diffs(field, ranks, diffs); }

void BinaryComplexPair::validate() const {
    validate_diffs(field, ranks, top);
    validate_diffs(field, ranks, bottom);
}

bool is_exact(const BoundedComplex& c) {
    const std::size_t d = c.top_degree();
    for (std::size_t k = 0; k + 1 < c.diffs.size(); ++k)
        if (!matmul(c.diffs[k], c.diffs[k + 1]).is_zero()) return false;
    std::vector<std::size_t> diff_rank(d + 2, 0); // rank of d_k: C_k -> C_{k-1}
    for (std::size_t k = 0; k < c.diffs.size(); ++k) diff_rank[k + 1] = rank(c.diffs[k]);
    for (std::size_t k = 0; k <= d; ++k)
        if (diff_rank[k + 1] + diff_rank[k] != c.ranks[k]) return false;
    return true;
}

bool is_acyclic(const BinaryComplexPair& c) {
    return is_exact(c.top_complex()) && is_exact(c.bottom_complex());
}

bool is_diagonal(const BinaryComplexPair& c) {
    for (std::size_t k = 0; k < c.top.size(); ++k)
        if (c.top[k] != c.bottom[k]) return false;
    return true;
}

} // namespace kpow
