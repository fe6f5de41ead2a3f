/* Sparse multivariate polynomials with exact integer coefficients in the
 * variables X_1..X_r, Y_1..Y_r. */
#ifndef KPOW_SYMPOLY_HPP
#define KPOW_SYMPOLY_HPP

#include "kpow/field.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace kpow {

/// A named indeterminate: alphabet X (0) or Y (1), index >= 1.
struct Var {
    int alphabet;      // 0 = X, 1 = Y
    std::size_t index; // 1-based

    static Var X(std::size_t k) { return Var{0, k}; }
    static Var Y(std::size_t k) { return Var{1, k}; }

    bool operator==(const Var& o) const {
        return alphabet == o.alphabet && index == o.index;
    }
    // X1 < X2 < ... < Y1 < Y2 < ...  (priority order for lex comparison)
    bool operator<(const Var& o) const {
        return alphabet != o.alphabet ? alphabet < o.alphabet : index < o.index;
    }
    std::string str() const {
        return (alphabet == 0 ? "X" : "Y") + std::to_string(index);
    }
};

/// Exponent vector, sparse: (var, exponent) pairs sorted by variable,
/// exponents positive.
struct Monomial {
    std::vector<std::pair<Var, std::size_t>> factors;

    std::size_t total_degree() const;
    std::size_t degree_of(const Var& v) const;
    bool operator==(const Monomial& o) const { return factors == o.factors; }
    std::string str() const;
};

Monomial monomial_mul(const Monomial& a, const Monomial& b);

/// Graded-lexicographic order: compare total degree first, then exponents on
/// X1, X2, ..., Y1, Y2, ... The largest monomial prints first.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Z; no zero coefficients are stored and terms are
/// kept in canonical graded-lex order, so equality is structural.
class SymPoly {
  public:
    SymPoly() = default;
    static SymPoly zero() { return SymPoly(); }
    static SymPoly constant(const mpz_class& c);
    static SymPoly variable(const Var& v);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, mpz_class, GradedLexLess>& terms() const { return terms_; }

    void add_term(const Monomial& m, const mpz_class& coeff);

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator-() const;
    SymPoly scaled(const mpz_class& c) const;
    SymPoly pow(std::size_t e) const;
    bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    /// Substitutes polynomials for variables. Variables not present in the
    /// map are kept. (Used to evaluate N_r at P_1,...,P_r and to set
    /// variables to zero.)
    SymPoly substitute(const std::map<Var, SymPoly>& assignment) const;

    /// Evaluates at field elements; every variable occurring in the
    /// polynomial must be assigned.
    Scalar evaluate(const std::map<Var, Scalar>& assignment, FieldSpec f) const;

    /// Weighted degree, X_k and Y_k counting with weight k; returns the
    /// (x, y) weights of a monomial; the polynomial is bihomogeneous iff all
    /// terms share one pair.
    static std::pair<std::size_t, std::size_t> weighted_bidegree(const Monomial& m);
    bool is_bihomogeneous(std::size_t wx, std::size_t wy) const;

    /// Swaps the X and Y alphabets.
    SymPoly swap_alphabets() const;

    /// Canonical text: terms in descending graded-lex order,
    /// e.g. "X1^2*Y2 + X2*Y1^2 - 2*X2*Y2".
    std::string str() const;

  private:
    std::map<Monomial, mpz_class, GradedLexLess> terms_;
};

} // namespace kpow

#endif
