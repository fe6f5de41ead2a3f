/* Schur polynomials in elementary-symmetric variables, Newton polynomials
 * and the universal product polynomial P_r. */
#ifndef KPOW_SYMFUNC_HPP
#define KPOW_SYMFUNC_HPP

#include "kpow/partition.hpp"
#include "kpow/sympoly.hpp"

namespace kpow {

enum class Alphabet { X, Y };

/// s_mu in the elementary-symmetric variables of the chosen alphabet, via
/// the dual Jacobi-Trudi determinant det(e_{mu~_i - i + j}) with e_k -> X_k.
/// max_var is the declared variable bound; |mu| must not exceed it.
SymPoly schur_in_e(const Partition& mu, Alphabet alphabet, std::size_t max_var);

/// The r-th Newton (power-sum) polynomial in e-variables, from the
/// recurrence p_r = e_1 p_{r-1} - e_2 p_{r-2} + ... + (-1)^{r-1} r e_r.
SymPoly newton_poly(std::size_t r, Alphabet alphabet = Alphabet::X);

/// P_r = sum over |mu| = r of s_mu(X) * s_{mu~}(Y); the integral polynomial
/// expressing the r-th lambda-class of a product.
SymPoly product_poly(std::size_t r);

/// Checks N_r(X) * N_r(Y) = N_r(P_1, ..., P_r) as exact polynomials.
bool verify_newton_multiplicativity(std::size_t r);

} // namespace kpow

#endif
