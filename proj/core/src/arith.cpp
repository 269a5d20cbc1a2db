#include "knothodge/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "knothodge/parity.hpp"

namespace knothodge {

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: argument must be positive");
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long gcd(long a, long b) { return std::gcd(a, b); }

std::string_view to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

Parity parse_parity(std::string_view text) {
  if (text == "odd") return Parity::odd;
  if (text == "even") return Parity::even;
  throw std::invalid_argument("unknown parity '" + std::string(text) + "' (expected odd|even)");
}

}  // namespace knothodge
