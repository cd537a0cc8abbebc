#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wlnash/game.hpp"
#include "wlnash/profile.hpp"

namespace wlnash {

enum class Player { Row, Column };

struct Deviation {
  Player player = Player::Row;
  std::size_t strategy = 0;
  Rational gain;
};

struct VerificationReport {
  bool is_ne = false;
  Rational row_payoff;
  Rational col_payoff;
  std::optional<Deviation> best_deviation;  // present iff a pure deviation gains
};

/// Exact check of the equilibrium conditions against all pure deviations.
/// Throws std::invalid_argument if the profile is not a pair of distributions
/// of length n.
VerificationReport verify_ne(const WinLoseGame& game, const MixedProfile& profile);

struct SubgameSelection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

inline constexpr std::size_t kDefaultSubgameLimit = 8;

/// An exact equilibrium of the subgame on `sel`, in subgame coordinates.
/// Candidates are the normalized vertices of both players' best-response
/// regions, each obtained from a square support/best-response system;
/// singular systems are skipped. Pairs are tried by ascending total support
/// size, lexicographic within a size. Throws std::invalid_argument when a
/// side exceeds `limit`.
MixedProfile subgame_ne(const WinLoseGame& game, const SubgameSelection& sel,
                        std::size_t limit = kDefaultSubgameLimit);

/// Lifts a subgame equilibrium on the cycle's rows and columns to the whole
/// game and checks it exactly. Throws std::logic_error if the lifted profile
/// fails verification.
MixedProfile mne_from_stable_cycle(const WinLoseGame& game, const CycleCandidate& cycle);

/// Every extreme equilibrium whose supports have at most `max_support`
/// strategies, one representative per (support p, support q) pair. Intended
/// as a test oracle: n <= 12.
std::vector<MixedProfile> brute_force_ne(const WinLoseGame& game, std::size_t max_support);

}  // namespace wlnash
