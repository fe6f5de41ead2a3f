#include "kpow/field.hpp"

namespace kpow {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    check(is_prime(p), "field modulus " + std::to_string(p) + " is not prime");
    check(p <= 10000, "prime modulus exceeds 10^4");
    return FieldSpec{p};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    check(new_r != 0, "division by zero in F_" + std::to_string(p));
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    check(r == 1, "non-unit in F_" + std::to_string(p));
    return t < 0 ? t + p : t;
}

Scalar::Scalar(FieldSpec f, const mpq_class& value) : field_(f) {
    if (f.is_rational()) {
        q_ = value;
        q_.canonicalize();
    } else {
        // reduce numerator * denominator^{-1} mod p
        mpz_class num = value.get_num(), den = value.get_den();
        std::int64_t p = f.p;
        std::int64_t n = mpz_class(num % p).get_si();
        if (n < 0) n += p;
        std::int64_t d = mpz_class(den % p).get_si();
        if (d < 0) d += p;
        check(d != 0, "denominator vanishes in F_" + std::to_string(p));
        r_ = d == 1 ? n : (n * mod_inverse(d, p)) % p;
    }
}

Scalar::Scalar(FieldSpec f, long value) : field_(f) {
    if (f.is_rational()) {
        q_ = value;
    } else {
        r_ = value % f.p;
        if (r_ < 0) r_ += f.p;
    }
}

Scalar Scalar::parse(FieldSpec f, const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw Error("cannot parse scalar '" + text + "'");
    check(v.get_den() != 0, "zero denominator in scalar '" + text + "'");
    v.canonicalize();
    return Scalar(f, v);
}

void Scalar::require_same_field(const Scalar& o) const {
    check(field_ == o.field_,
          "field mismatch: " + field_.str() + " vs " + o.field_.str());
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    Scalar out(field_, 0L);
    if (field_.is_rational())
        out.q_ = q_ + o.q_;
    else
        out.r_ = (r_ + o.r_) % field_.p;
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    Scalar out(field_, 0L);
    if (field_.is_rational())
        out.q_ = q_ - o.q_;
    else
        out.r_ = (r_ - o.r_ + field_.p) % field_.p;
    return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    Scalar out(field_, 0L);
    if (field_.is_rational())
        out.q_ = q_ * o.q_;
    else
        out.r_ = (r_ * o.r_) % field_.p;
    return out;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    Scalar out(field_, 0L);
    if (field_.is_rational())
        out.q_ = -q_;
    else
        out.r_ = r_ == 0 ? 0 : field_.p - r_;
    return out;
}

Scalar Scalar::inv() const {
    check(!is_zero(), "inverse of zero");
    Scalar out(field_, 0L);
    if (field_.is_rational())
        out.q_ = 1 / q_;
    else
        out.r_ = mod_inverse(r_, field_.p);
    return out;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc = one(field_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(o);
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    require_same_field(o);
    return field_.is_rational() ? q_ < o.q_ : r_ < o.r_;
}

const mpq_class& Scalar::rational() const {
    check(field_.is_rational(), "not a rational scalar");
    return q_;
}

std::int64_t Scalar::residue() const {
    check(!field_.is_rational(), "not a prime-field scalar");
    return r_;
}

std::string Scalar::str() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

} // namespace kpow
