/* Computable invariants of K-class representatives: the torsion
 * (determinant) invariant of acyclic binary complexes, and the multilinear
 * symbol invariant in tensor powers of the unit group. */
#ifndef KPOW_INVARIANTS_HPP
#define KPOW_INVARIANTS_HPP

#include "kpow/complexes.hpp"
#include "kpow/cube.hpp"

#include <map>
#include <vector>

namespace kpow {

/// A unit of the base field on the canonical generators: over Q a sign and
/// a prime factorization, over F_p a discrete log with respect to the least
/// primitive root.
struct UnitRepr {
    FieldSpec field;
    int sign = 1;                              // Q only
    std::map<std::int64_t, long long> exponents; // Q only: prime -> exponent
    long long dlog = 0;                        // F_p only, mod p-1

    bool operator==(const UnitRepr& o) const;
    std::string str() const;
};

/// Default trial-division bound for factoring rational units.
constexpr std::int64_t kDefaultFactorBound = 1000000;

UnitRepr unit_repr(const Scalar& x, std::int64_t factor_bound = kDefaultFactorBound);

std::int64_t least_primitive_root(std::int64_t p);

/// Torsion of an acyclic binary complex: tau(top) / tau(bottom), each tau
/// the classical torsion of a based acyclic complex computed from
/// echelon-form splittings. Diagonal complexes give 1; [F^p; (A, 1)] gives
/// det(A). column_preference[k], when given, reorders the greedy choice of
/// splitting columns in degree k (the result does not depend on it).
Scalar torsion(const BinaryComplexPair& c);
Scalar torsion(const BinaryComplexPair& c,
               const std::vector<std::vector<std::size_t>>& column_preference);

/// Element of the n-fold tensor power of the unit group, in multilinear
/// normal form: tuples of basis labels (over Q: -1 and primes; over F_p:
/// the least primitive root) with integer coefficients. Coefficients on
/// tuples containing the torsion label -1 live mod 2 over Q; over F_p all
/// coefficients live mod p-1.
class SymbolElement {
  public:
    SymbolElement(FieldSpec field, std::size_t arity);

    FieldSpec field() const { return field_; }
    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<std::int64_t>, long long>& terms() const { return terms_; }

    void add(const std::vector<std::int64_t>& labels, long long coeff);
    SymbolElement operator+(const SymbolElement& o) const;
    SymbolElement operator-(const SymbolElement& o) const;
    SymbolElement scaled(long long c) const;
    bool operator==(const SymbolElement& o) const;

    std::string str() const;

  private:
    FieldSpec field_;
    std::size_t arity_;
    std::map<std::vector<std::int64_t>, long long> terms_;
};

/// The multilinear symbol of a cube with eigen-data: the sum over joint
/// eigenvalue tuples of their expansion into unit-group basis labels.
SymbolElement symbol(const Cube& c, std::int64_t factor_bound = kDefaultFactorBound);

/// Linear extension of symbol; every term must carry eigen-data.
SymbolElement symbol_of_sum(const FormalSum& s,
                            std::int64_t factor_bound = kDefaultFactorBound);

/// Collapses an arity-1 symbol back to a unit representation (multiplying
/// out the multilinearity expansion).
UnitRepr collapse_symbol(const SymbolElement& s);

/// The K_1 value of a formal sum of 1-cubes: the product over terms of
/// torsion(cube)^coefficient.
Scalar k1_value(const FormalSum& s);

} // namespace kpow

#endif
