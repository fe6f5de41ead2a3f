#include "kpow/sympoly.hpp"

#include <algorithm>
#include <sstream>

namespace kpow {

std::size_t Monomial::total_degree() const {
    std::size_t d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
}

std::size_t Monomial::degree_of(const Var& v) const {
    for (const auto& [w, e] : factors)
        if (w == v) return e;
    return 0;
}

std::string Monomial::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        os << (i ? "*" : "") << factors[i].first.str();
        if (factors[i].second > 1) os << "^" << factors[i].second;
    }
    return os.str();
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() || ib != b.factors.end()) {
        if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first))
            out.factors.push_back(*ia++);
        else if (ia == a.factors.end() || ib->first < ia->first)
            out.factors.push_back(*ib++);
        else {
            out.factors.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }
    return out;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::size_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // lex on exponents in variable priority order; factors are sorted by Var
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        if (ia->first < ib->first) return false; // a has the earlier var -> a larger
        if (ib->first < ia->first) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia, ++ib;
    }
    return ia == a.factors.end() && ib != b.factors.end();
}

SymPoly SymPoly::constant(const mpz_class& c) {
    SymPoly p;
    p.add_term(Monomial{}, c);
    return p;
}

SymPoly SymPoly::variable(const Var& v) {
    SymPoly p;
    p.add_term(Monomial{{{v, 1}}}, 1);
    return p;
}

void SymPoly::add_term(const Monomial& m, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    SymPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
    return out;
}

SymPoly SymPoly::operator-() const {
    SymPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SymPoly SymPoly::scaled(const mpz_class& c) const {
    SymPoly out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

SymPoly SymPoly::pow(std::size_t e) const {
    SymPoly acc = constant(1);
    for (std::size_t i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

SymPoly SymPoly::substitute(const std::map<Var, SymPoly>& assignment) const {
    SymPoly out;
    for (const auto& [m, c] : terms_) {
        SymPoly term = constant(c);
        for (const auto& [v, e] : m.factors) {
            auto it = assignment.find(v);
            SymPoly base = it == assignment.end() ? variable(v) : it->second;
            term = term * base.pow(e);
        }
        out = out + term;
    }
    return out;
}

Scalar SymPoly::evaluate(const std::map<Var, Scalar>& assignment, FieldSpec f) const {
    Scalar acc = Scalar::zero(f);
    for (const auto& [m, c] : terms_) {
        Scalar term(f, mpq_class(c));
        for (const auto& [v, e] : m.factors) {
            auto it = assignment.find(v);
            check(it != assignment.end(), "evaluate: unassigned variable " + v.str());
            term = term * it->second.pow(static_cast<long>(e));
        }
        acc = acc + term;
    }
    return acc;
}

std::pair<std::size_t, std::size_t> SymPoly::weighted_bidegree(const Monomial& m) {
    std::size_t wx = 0, wy = 0;
    for (const auto& [v, e] : m.factors)
        (v.alphabet == 0 ? wx : wy) += v.index * e;
    return {wx, wy};
}

bool SymPoly::is_bihomogeneous(std::size_t wx, std::size_t wy) const {
    for (const auto& [m, c] : terms_)
        if (weighted_bidegree(m) != std::make_pair(wx, wy)) return false;
    return true;
}

SymPoly SymPoly::swap_alphabets() const {
    SymPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial swapped = m;
        for (auto& [v, e] : swapped.factors) v.alphabet = 1 - v.alphabet;
        std::sort(swapped.factors.begin(), swapped.factors.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.add_term(swapped, c);
    }
    return out;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending graded-lex
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpz_class& c = it->second;
        mpz_class abs_c = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = abs_c == 1 && !it->first.factors.empty();
        if (!unit_coeff) os << abs_c.get_str();
        if (!it->first.factors.empty()) {
            if (!unit_coeff) os << "*";
            os << it->first.str();
        }
    }
    return os.str();
}

} // namespace kpow
