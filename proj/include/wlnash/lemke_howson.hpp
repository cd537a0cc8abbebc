#pragma once

#include <cstddef>
#include <vector>

#include "wlnash/game.hpp"
#include "wlnash/profile.hpp"

namespace wlnash {

struct LhOptions {
  /// Constant added to every payoff before pivoting; must be >= 1 so that
  /// both best-response polytopes are bounded.
  int shift = 1;
  /// Record every visited basis pair and fail on a repeat.
  bool audit_bases = false;
};

struct LhResult {
  MixedProfile profile;
  std::size_t pivots = 0;
  /// Entering label (1-based) of every pivot, in order.
  std::vector<std::size_t> path;
};

/// Lemke-Howson complementary pivoting from the artificial equilibrium,
/// dropping `dropped_label` (1..n for rows, n+1..2n for columns). Exact
/// integer tableaux with the lexicographic minimum-ratio rule. Throws
/// std::invalid_argument for a label out of range and std::logic_error if a
/// path invariant is ever violated.
LhResult solve_lh(const WinLoseGame& game, std::size_t dropped_label = 1,
                  const LhOptions& options = {});

inline std::size_t pivot_count(const LhResult& last_run) { return last_run.pivots; }

}  // namespace wlnash
