#pragma once

#include <vector>

#include "knothodge/useries.hpp"
#include "knothodge/xpoly.hpp"

namespace knothodge {

/// Faulhaber polynomial S_k(x), the unique polynomial with
/// S_k(n) = 1^k + 2^k + ... + n^k for every positive integer n.
/// Read off the exponential generating function (e^{(x+1)t} - 1)/(e^t - 1).
/// Throws std::invalid_argument for k < 1.
XPoly faulhaber(int k);

/// S_1 .. S_kmax in one pass; element 0 is the zero polynomial.
std::vector<XPoly> faulhaber_table(int kmax);

/// Gamma(x, u) = sum_j gamma_j(x) u^j truncated after u^order, computed as
/// exp(sum_k S_k(x) u^k / k). gamma_j has degree 2j.
USeries gamma_expansion(int order);

/// Gamma(n, u) at an integer n, from the finite product form:
/// 1 / ((1-u)(1-2u)...(1-nu)) for n >= 0, and (1+u)(1+2u)...(1+(m-1)u) for n = -m < 0.
USeries gamma_product_at_integer(long n, int order);

}  // namespace knothodge
