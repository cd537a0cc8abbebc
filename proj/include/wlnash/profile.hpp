#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wlnash {

using Rational = mpq_class;

/// "num/den" with a positive denominator, e.g. "1/2", "0/1", "1/1".
std::string to_fraction_string(const Rational& q);
/// Accepts "num/den" or an integer. Throws std::invalid_argument.
Rational parse_fraction(const std::string& text);

/// Pair of exact mixed strategies (row player p, column player q).
struct MixedProfile {
  std::vector<Rational> p;
  std::vector<Rational> q;

  static MixedProfile pure(std::size_t n, std::size_t row, std::size_t col);
  static MixedProfile uniform(std::size_t n);

  std::vector<std::size_t> support_p() const;
  std::vector<std::size_t> support_q() const;

  /// Nonnegative entries summing exactly to one on both sides.
  bool is_distribution() const;

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
};

}  // namespace wlnash
