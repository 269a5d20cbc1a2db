#pragma once

#include <vector>

#include "knothodge/parity.hpp"
#include "knothodge/rational.hpp"
#include "knothodge/useries.hpp"
#include "knothodge/xpoly.hpp"

namespace knothodge {

/// Necklace polynomial E_l(x) = (1/l) sum_{m | l} mu(m) x^{l/m}.
XPoly necklace(long ell);

/// Coefficients of F_l(u) = l u^l E_l(1/u) = sum_{m | l} mu(m) u^{l - l/m}, index = power of u.
std::vector<long> f_ell_coefficients(long ell);

/// F_l(u) as a series truncated after u^order. Its constant term is 1.
USeries f_ell(long ell, int order);

/// Factor l of the product formula for the homology generating function:
///   Gamma(E_l(x), +-l u^l / F_l(u)) * F_l(u)^{-E_l(x)},
/// with the + sign for odd ambient dimension and - for even.
/// `gamma` must be gamma_expansion(order) (passed in to share it across factors).
USeries factor(long ell, Parity ambient, const USeries& gamma);
USeries factor(long ell, Parity ambient, int order);

/// F(x, u) = sum_j P_j(x) u^j truncated after u^order: the product of
/// factor(l) over 1 <= l <= 2*order. Factors beyond 2*order are exactly 1 at
/// this order. P_j has integer coefficients and degree <= 2j (checked; a
/// violation throws std::logic_error).
USeries assemble(Parity ambient, int order);

}  // namespace knothodge
