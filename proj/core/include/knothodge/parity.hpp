#pragma once

#include <ostream>
#include <string>
#include <string_view>

namespace knothodge {

/// Parity of an integer parameter (the ambient dimension d, or the
/// external-vertex degree k). Everything this library computes depends on
/// these parameters only through their parity.
enum class Parity { odd, even };

constexpr Parity parity_of(long n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }

/// +1 for even, -1 for odd.
constexpr int sign_of(Parity p) { return p == Parity::even ? 1 : -1; }

std::string_view to_string(Parity p);

/// Accepts "odd" / "even"; throws std::invalid_argument otherwise.
Parity parse_parity(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, Parity p) { return os << to_string(p); }

}  // namespace knothodge
