#include "kpow/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace kpow {

bool UnitRepr::operator==(const UnitRepr& o) const {
    if (field != o.field) return false;
    return field.is_rational() ? (sign == o.sign && exponents == o.exponents)
                               : dlog == o.dlog;
}

std::string UnitRepr::str() const {
    std::ostringstream os;
    if (field.is_rational()) {
        os << (sign < 0 ? "-" : "+");
        for (const auto& [p, e] : exponents) os << " " << p << "^" << e;
    } else {
        os << "g^" << dlog << " (g = " << least_primitive_root(field.p) << ")";
    }
    return os.str();
}

namespace {

/// Trial-division factorization; the leftover cofactor is accepted exactly
/// when it is provably prime (below the square of the bound).
std::map<std::int64_t, long long> factor(mpz_class m, std::int64_t bound) {
    std::map<std::int64_t, long long> out;
    check(m > 0, "factor expects a positive integer");
    for (std::int64_t d = 2; d <= bound && mpz_class(d) * d <= m;
         d = d == 2 ? 3 : d + 2) {
        long long e = 0;
        while (mpz_class(m % d) == 0) {
            m /= d;
            ++e;
        }
        if (e > 0) out[d] += e;
    }
    if (m > 1) {
        check(m <= mpz_class(bound) * bound,
              "incomplete factorization: cofactor " + m.get_str() +
                  " exceeds the bound; raise the factor bound");
        out[m.get_si()] += 1;
    }
    return out;
}

} // namespace

std::int64_t least_primitive_root(std::int64_t p) {
    check(is_prime(p), "primitive root of a non-prime modulus");
    if (p == 2) return 1;
    std::vector<std::int64_t> prime_factors;
    std::int64_t m = p - 1;
    for (std::int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (std::int64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (std::int64_t q : prime_factors) {
            Scalar s(FieldSpec::prime(p), g);
            if (s.pow((p - 1) / q).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw Error("no primitive root found");
}

UnitRepr unit_repr(const Scalar& x, std::int64_t factor_bound) {
    check(!x.is_zero(), "unit_repr of zero");
    UnitRepr out;
    out.field = x.field();
    if (x.field().is_rational()) {
        mpq_class v = x.rational();
        out.sign = v < 0 ? -1 : 1;
        mpz_class num = abs(v.get_num()), den = v.get_den();
        for (const auto& [p, e] : factor(num, factor_bound)) out.exponents[p] += e;
        for (const auto& [p, e] : factor(den, factor_bound)) out.exponents[p] -= e;
        std::erase_if(out.exponents, [](const auto& kv) { return kv.second == 0; });
    } else {
        const std::int64_t p = x.field().p;
        const std::int64_t g = least_primitive_root(p);
        Scalar acc = Scalar::one(x.field());
        Scalar base(x.field(), g);
        for (std::int64_t k = 0; k < p - 1; ++k) {
            if (acc == x) {
                out.dlog = k;
                return out;
            }
            acc = acc * base;
        }
        throw Error("discrete log not found (non-unit?)");
    }
    return out;
}

namespace {

/// Greedy independent column selection in the given preference order;
/// returns column indices of a basis of the column space.
std::vector<std::size_t> splitting_columns(const ExactMatrix& m,
                                           const std::vector<std::size_t>& preference) {
    std::vector<std::size_t> chosen;
    std::vector<std::vector<Scalar>> echelon; // reduced spanning vectors
    std::vector<std::size_t> lead;            // leading index per echelon row
    for (std::size_t pref : preference) {
        std::vector<Scalar> v(m.rows(), Scalar::zero(m.field()));
        for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, pref);
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            if (v[lead[k]].is_zero()) continue;
            Scalar f = v[lead[k]];
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = v[i] - f * echelon[k][i];
        }
        std::size_t nz = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                nz = i;
                break;
            }
        if (nz == v.size()) continue; // dependent
        Scalar inv = v[nz].inv();
        for (auto& e : v) e = e * inv;
        echelon.push_back(std::move(v));
        lead.push_back(nz);
        chosen.push_back(pref);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

/// Classical torsion of a based acyclic complex: the alternating product of
/// det[d V_{k+1} | V_k] over degrees, with V_k the chosen complement
/// columns.
Scalar tau(const BoundedComplex& c,
           const std::vector<std::vector<std::size_t>>& column_preference) {
    const std::size_t d = c.top_degree();
    const FieldSpec f = c.field;
    std::vector<std::vector<std::size_t>> J(d + 2);
    for (std::size_t k = 1; k <= d; ++k)
        J[k] = splitting_columns(c.diffs[k - 1], column_preference[k]);
    Scalar out = Scalar::one(f);
    for (std::size_t k = 0; k <= d; ++k) {
        const std::size_t b_hi = k < d ? J[k + 1].size() : 0;
        const std::size_t b_lo = J[k].size();
        check(b_hi + b_lo == c.ranks[k], "torsion: complex is not exact");
        ExactMatrix m(f, c.ranks[k], c.ranks[k]);
        for (std::size_t j = 0; j < b_hi; ++j)
            for (std::size_t i = 0; i < c.ranks[k]; ++i)
                m.at(i, j) = c.diffs[k].at(i, J[k + 1][j]);
        for (std::size_t j = 0; j < b_lo; ++j) m.at(J[k][j], b_hi + j) = Scalar::one(f);
        Scalar dm = det(m);
        check(!dm.is_zero(), "torsion: degenerate splitting");
        out = k % 2 == 0 ? out * dm : out / dm;
    }
    return out;
}

} // namespace

Scalar torsion(const BinaryComplexPair& c,
               const std::vector<std::vector<std::size_t>>& column_preference) {
    c.validate();
    check(is_acyclic(c), "torsion requires an acyclic binary complex");
    check(column_preference.size() == c.ranks.size(),
          "torsion: one column preference per degree expected");
    return tau(c.top_complex(), column_preference) /
           tau(c.bottom_complex(), column_preference);
}

Scalar torsion(const BinaryComplexPair& c) {
    std::vector<std::vector<std::size_t>> natural;
    for (std::size_t r : c.ranks) {
        std::vector<std::size_t> order(r);
        for (std::size_t i = 0; i < r; ++i) order[i] = i;
        natural.push_back(std::move(order));
    }
    return torsion(c, natural);
}

SymbolElement::SymbolElement(FieldSpec field, std::size_t arity)
    : field_(field), arity_(arity) {}

void SymbolElement::add(const std::vector<std::int64_t>& labels, long long coeff) {
    check(labels.size() == arity_, "symbol tuple arity mismatch");
    auto it = terms_.find(labels);
    long long next = (it == terms_.end() ? 0 : it->second) + coeff;
    // tensor-group torsion: mod p-1 over F_p; mod 2 over Q when the tuple
    // contains the sign label
    long long modulus = 0;
    if (!field_.is_rational())
        modulus = field_.p - 1;
    else if (std::find(labels.begin(), labels.end(), -1) != labels.end())
        modulus = 2;
    if (modulus > 0) next = ((next % modulus) + modulus) % modulus;
    if (next == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it != terms_.end()) {
        it->second = next;
    } else {
        terms_.emplace(labels, next);
    }
}

SymbolElement SymbolElement::operator+(const SymbolElement& o) const {
    check(field_ == o.field_ && arity_ == o.arity_, "symbol shape mismatch");
    SymbolElement out = *this;
    for (const auto& [t, c] : o.terms_) out.add(t, c);
    return out;
}

SymbolElement SymbolElement::operator-(const SymbolElement& o) const {
    check(field_ == o.field_ && arity_ == o.arity_, "symbol shape mismatch");
    SymbolElement out = *this;
    for (const auto& [t, c] : o.terms_) out.add(t, -c);
    return out;
}

SymbolElement SymbolElement::scaled(long long c) const {
    SymbolElement out(field_, arity_);
    for (const auto& [t, k] : terms_) out.add(t, k * c);
    return out;
}

bool SymbolElement::operator==(const SymbolElement& o) const {
    return field_ == o.field_ && arity_ == o.arity_ && terms_ == o.terms_;
}

std::string SymbolElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << "(";
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
        os << ")";
    }
    return os.str();
}

SymbolElement symbol(const Cube& c, std::int64_t factor_bound) {
    check(c.eigen().has_value(), "symbol requires eigen-data");
    const std::size_t n = c.dims();
    SymbolElement out(c.field(), n);
    if (n == 0) {
        out.add({}, static_cast<long long>(c.rank()));
        return out;
    }
    for (std::size_t k = 0; k < c.rank(); ++k) {
        // multilinear expansion of the k-th joint eigenvalue tuple
        std::vector<std::vector<std::pair<std::int64_t, long long>>> expansions;
        for (std::size_t j = 0; j < n; ++j) {
            UnitRepr u = unit_repr(c.eigen()->diagonals[j][k], factor_bound);
            std::vector<std::pair<std::int64_t, long long>> e;
            if (u.field.is_rational()) {
                if (u.sign < 0) e.emplace_back(-1, 1);
                for (const auto& [p, exp] : u.exponents) e.emplace_back(p, exp);
            } else {
                e.emplace_back(least_primitive_root(u.field.p), u.dlog);
            }
            expansions.push_back(std::move(e));
        }
        std::vector<std::int64_t> labels(n);
        // iterate the cartesian product of label choices
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            bool done = false;
            long long coeff = 1;
            for (std::size_t j = 0; j < n; ++j) {
                if (expansions[j].empty()) { // eigenvalue 1 contributes nothing
                    done = true;
                    break;
                }
                labels[j] = expansions[j][idx[j]].first;
                coeff *= expansions[j][idx[j]].second;
            }
            if (!done) out.add(labels, coeff);
            // advance
            std::size_t j = 0;
            for (; j < n; ++j) {
                if (expansions[j].empty()) break;
                if (++idx[j] < expansions[j].size()) break;
                idx[j] = 0;
            }
            if (j == n || expansions[j].empty()) break;
        }
    }
    return out;
}

SymbolElement symbol_of_sum(const FormalSum& s, std::int64_t factor_bound) {
    if (s.empty()) return SymbolElement(FieldSpec::rationals(), 0);
    const Cube& first = s.terms().begin()->first;
    SymbolElement out(first.field(), first.dims());
    for (const auto& [c, k] : s.terms()) {
        check(c.eigen().has_value(), "symbol_of_sum: a term lacks eigen-data");
        out = out + symbol(c, factor_bound).scaled(k);
    }
    return out;
}

UnitRepr collapse_symbol(const SymbolElement& s) {
    check(s.arity() == 1, "collapse_symbol expects arity 1");
    UnitRepr out;
    out.field = s.field();
    if (s.field().is_rational()) {
        long long minus_ones = 0;
        for (const auto& [t, c] : s.terms()) {
            if (t[0] == -1)
                minus_ones += c;
            else
                out.exponents[t[0]] += c;
        }
        out.sign = minus_ones % 2 == 0 ? 1 : -1;
        std::erase_if(out.exponents, [](const auto& kv) { return kv.second == 0; });
    } else {
        long long e = 0;
        for (const auto& [t, c] : s.terms()) e += c; // labels are all g
        const long long m = s.field().p - 1;
        out.dlog = ((e % m) + m) % m;
    }
    return out;
}

Scalar k1_value(const FormalSum& s) {
    Scalar acc = Scalar::one(s.empty() ? FieldSpec::rationals()
                                       : s.terms().begin()->first.field());
    for (const auto& [c, k] : s.terms()) {
        check(c.dims() == 1, "k1_value expects 1-cubes");
        Scalar t = torsion(cube_to_complex_pair(c));
        acc = acc * t.pow(k);
    }
    return acc;
}

} // namespace kpow
