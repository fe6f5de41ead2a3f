#include "kpow/symfunc.hpp"

#include "kpow/field.hpp"

namespace kpow {

namespace {

Var make_var(Alphabet a, std::size_t k) {
    return a == Alphabet::X ? Var::X(k) : Var::Y(k);
}

/// e_k as a polynomial: e_0 = 1, e_k = X_k for k >= 1, e_{<0} = 0.
SymPoly elementary(long k, Alphabet a) {
    if (k < 0) return SymPoly::zero();
    if (k == 0) return SymPoly::constant(1);
    return SymPoly::variable(make_var(a, static_cast<std::size_t>(k)));
}

/// Laplace expansion along the first row; entries are small polynomials.
SymPoly poly_det(const std::vector<std::vector<SymPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return SymPoly::constant(1);
    if (n == 1) return m[0][0];
    SymPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<SymPoly>> sub(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) sub[i - 1].push_back(m[i][k]);
        SymPoly cof = m[0][j] * poly_det(sub);
        acc = j % 2 == 0 ? acc + cof : acc - cof;
    }
    return acc;
}

} // namespace

SymPoly schur_in_e(const Partition& mu, Alphabet alphabet, std::size_t max_var) {
    check(mu.weight() <= max_var, "partition weight exceeds the variable bound");
    Partition conj = conjugate(mu);
    const std::size_t n = conj.length();
    std::vector<std::vector<SymPoly>> m(n, std::vector<SymPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long idx = static_cast<long>(conj.parts[i]) - static_cast<long>(i + 1) +
                       static_cast<long>(j + 1);
            m[i][j] = elementary(idx, alphabet);
        }
    return poly_det(m);
}

SymPoly newton_poly(std::size_t r, Alphabet alphabet) {
    check(r >= 1, "newton_poly expects r >= 1");
    std::vector<SymPoly> p(r + 1);
    for (std::size_t k = 1; k <= r; ++k) {
        SymPoly acc;
        for (std::size_t i = 1; i < k; ++i) {
            SymPoly term = elementary(static_cast<long>(i), alphabet) * p[k - i];
            acc = i % 2 == 1 ? acc + term : acc - term;
        }
        SymPoly last = elementary(static_cast<long>(k), alphabet)
                           .scaled(mpz_class(static_cast<long>(k)));
        p[k] = k % 2 == 1 ? acc + last : acc - last;
    }
    return p[r];
}

SymPoly product_poly(std::size_t r) {
    check(r >= 1, "product_poly expects r >= 1");
    SymPoly acc;
    for (const Partition& mu : partitions_of(r))
        acc = acc + schur_in_e(mu, Alphabet::X, r) *
                        schur_in_e(conjugate(mu), Alphabet::Y, r);
    return acc;
}

bool verify_newton_multiplicativity(std::size_t r) {
    check(r >= 1 && r <= 6, "verify_newton_multiplicativity supports 1 <= r <= 6");
    SymPoly lhs = newton_poly(r, Alphabet::X) * newton_poly(r, Alphabet::Y);
    std::map<Var, SymPoly> subst;
    for (std::size_t k = 1; k <= r; ++k) subst[Var::X(k)] = product_poly(k);
    SymPoly rhs = newton_poly(r, Alphabet::X).substitute(subst);
    return lhs == rhs;
}

} // namespace kpow
