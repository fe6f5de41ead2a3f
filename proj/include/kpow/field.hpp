/* Exact scalars over Q and prime fields F_p. */
#ifndef KPOW_FIELD_HPP
#define KPOW_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kpow {

/// Error for violated preconditions (dimension/field mismatches, bad input).
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

/// Base field: the rationals, or F_p for a prime p <= 10^4.
struct FieldSpec {
    // p == 0 means Q; otherwise the (validated) prime modulus.
    std::int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(std::int64_t p);

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldSpec& o) const { return p == o.p; }
    bool operator!=(const FieldSpec& o) const { return p != o.p; }

    std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

bool is_prime(std::int64_t n);

/// An exact field element. Rationals are arbitrary-precision fractions;
/// prime-field elements are residues in [0, p).
class Scalar {
  public:
    Scalar() : field_(FieldSpec::rationals()), q_(0) {}
    Scalar(FieldSpec f, const mpq_class& value);
    Scalar(FieldSpec f, long value);

    static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
    static Scalar one(FieldSpec f) { return Scalar(f, 1); }
    /// Parses "n", "-n" or "n/d" (reduced mod p over prime fields).
    static Scalar parse(FieldSpec f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(long e) const;  // e may be negative for units

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // canonical order, for map keys

    /// The rational value (field must be Q).
    const mpq_class& rational() const;
    /// The residue in [0, p) (field must be F_p).
    std::int64_t residue() const;

    std::string str() const;

  private:
    FieldSpec field_;
    mpq_class q_;        // value over Q
    std::int64_t r_ = 0; // residue over F_p
    void require_same_field(const Scalar& o) const;
};

/// Modular inverse of a mod p (p prime, a not divisible by p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

} // namespace kpow

#endif
