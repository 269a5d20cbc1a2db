#pragma once

#include <vector>

namespace knothodge {

/// Moebius function; n must be >= 1.
int mobius(long n);

/// Positive divisors of n in increasing order; n must be >= 1.
std::vector<long> divisors(long n);

long gcd(long a, long b);

}  // namespace knothodge
