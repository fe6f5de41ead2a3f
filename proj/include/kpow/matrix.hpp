/* Dense exact matrices over Q / F_p and the multilinear constructions
 * (Kronecker product, direct sum, r-th compound). */
#ifndef KPOW_MATRIX_HPP
#define KPOW_MATRIX_HPP

#include "kpow/field.hpp"

#include <cstddef>
#include <vector>

namespace kpow {

class ExactMatrix {
  public:
    ExactMatrix() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}
    ExactMatrix(FieldSpec f, std::size_t rows, std::size_t cols);
    ExactMatrix(FieldSpec f, std::size_t rows, std::size_t cols,
                std::vector<Scalar> entries);

    static ExactMatrix identity(FieldSpec f, std::size_t n);
    static ExactMatrix zero(FieldSpec f, std::size_t rows, std::size_t cols);
    static ExactMatrix diagonal(FieldSpec f, const std::vector<Scalar>& d);
    /// Row-major construction from integer literals (tests, mostly).
    static ExactMatrix from_ints(FieldSpec f, std::size_t rows, std::size_t cols,
                                 const std::vector<long>& entries);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    Scalar& at(std::size_t i, std::size_t j);

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator-() const;
    ExactMatrix scaled(const Scalar& c) const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transpose() const;
    Scalar trace() const;
    bool is_identity() const;
    bool is_zero() const;

    std::string str() const;

  private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_; // row-major
};

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);

/// Exact determinant by Gaussian elimination. det of the 0x0 matrix is 1.
Scalar det(const ExactMatrix& a);

/// Kronecker product in row-major basis order: basis pair (i,j) of
/// F^m (x) F^n maps to index i*n + j.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Direct sum (block diagonal).
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks, FieldSpec f);

/// Lexicographically ordered r-subsets of {0,..,n-1}.
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t r);
std::size_t binomial(std::size_t n, std::size_t r);

/// r-th compound matrix: the C(rows,r) x C(cols,r) matrix of r x r minors,
/// rows/columns indexed by lexicographically ordered r-subsets. r >= 1.
/// When r exceeds a dimension the corresponding index set is empty.
ExactMatrix compound(const ExactMatrix& a, std::size_t r);

/// True iff all matrices are invertible and commute pairwise.
bool commute_check(const std::vector<ExactMatrix>& ms);

struct Rref {
    ExactMatrix mat;                 // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row
};
Rref rref(const ExactMatrix& a);

std::size_t rank(const ExactMatrix& a);
bool is_invertible(const ExactMatrix& a);
ExactMatrix inverse(const ExactMatrix& a);

/// Basis of the right null space, one column per basis vector, in the
/// deterministic echelon parametrization (cols x nullity).
ExactMatrix kernel_basis(const ExactMatrix& a);

/// Solves a * x = b exactly; throws if the system is inconsistent or the
/// solution is not unique (a must have full column rank).
ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b);

} // namespace kpow

#endif
