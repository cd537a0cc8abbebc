#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wlnash/bit_matrix.hpp"

namespace wlnash {

/// Pure strategy pair, zero-based (row i, column j).
struct PurePair {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const PurePair&, const PurePair&) = default;
};

enum class Side { R, C };

/// A win-lose bimatrix game: two n x n 0/1 payoff matrices. `a` holds the
/// row player's payoffs and `b` the column player's, both row-major by row
/// strategy.
class WinLoseGame {
 public:
  WinLoseGame(BitMatrix a, BitMatrix b);

  /// Builds a game from nested 0/1 rows. Throws std::invalid_argument on
  /// ragged, non-square or non-binary input.
  static WinLoseGame from_rows(const std::vector<std::vector<int>>& a,
                               const std::vector<std::vector<int>>& b);

  std::size_t n() const { return n_; }
  bool a(std::size_t i, std::size_t j) const { return a_.test(i, j); }
  bool b(std::size_t i, std::size_t j) const { return b_.test(i, j); }
  const BitMatrix& a_bits() const { return a_; }
  const BitMatrix& b_bits() const { return b_; }

  friend bool operator==(const WinLoseGame&, const WinLoseGame&) = default;

 private:
  std::size_t n_;
  BitMatrix a_;
  BitMatrix b_;
};

/// Bipartite digraph form of a game. `out_r` row i holds the columns c_j
/// with arc r_i -> c_j (b(i,j) = 1); `out_c` row j holds the rows r_i with
/// arc c_j -> r_i (a(i,j) = 1).
struct GameDigraph {
  std::size_t n = 0;
  BitMatrix out_r;
  BitMatrix out_c;

  bool arc_rc(std::size_t i, std::size_t j) const { return out_r.test(i, j); }
  bool arc_cr(std::size_t j, std::size_t i) const { return out_c.test(j, i); }
  std::size_t arc_count() const { return out_r.count() + out_c.count(); }

  friend bool operator==(const GameDigraph&, const GameDigraph&) = default;
};

struct GenParams {
  std::size_t n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
};

struct SprinkleParams {
  double p0 = 0.0;
  double p1 = 0.0;
  double delta0 = 1.0;

  /// p1 = (p - p0) / (1 - p0) for a target marginal p > p0, delta0 = n^{-1/8}.
  static SprinkleParams for_target(std::size_t n, double p0, double p);
};

/// Directed 2l-cycle r_0 -> c_0 -> r_1 -> c_1 -> ... -> r_{l-1} -> c_{l-1} -> r_0.
struct CycleCandidate {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t ell() const { return rows.size(); }
  friend bool operator==(const CycleCandidate&, const CycleCandidate&) = default;
};

/// Every entry of a and b is an independent Bernoulli(p) draw addressed by
/// (seed, entry index). Throws std::invalid_argument for n = 0 or p outside
/// [0, 1].
WinLoseGame generate_game(const GenParams& params);

/// Fraction of 1 entries over both payoff matrices.
double game_density(const WinLoseGame& game);

GameDigraph to_digraph(const WinLoseGame& game);
WinLoseGame from_digraph(const GameDigraph& d);

/// Pure Nash equilibrium by the win-lose case split; O(n^2 / w) word work.
std::optional<PurePair> pne_search(const WinLoseGame& game);

/// Exact pure best-response test, used as an oracle.
bool is_pure_ne(const WinLoseGame& game, PurePair pair);

/// First (i, j) in index order with r_i -> c_j and c_j -> r_i.
std::optional<PurePair> mutual_arc_exists(const GameDigraph& d);

/// Adds every absent arc of d0 independently with probability p1. Realized
/// by OR-ing a fresh Bernoulli(p1) layer onto d0.
GameDigraph sprinkle(const GameDigraph& d0, double p1, std::uint64_t seed);

/// True iff every cycle vertex has out-degree < (1 + delta) n p0 in d0.
bool is_delta_admissible(const GameDigraph& d0, const CycleCandidate& cycle,
                         double delta, double p0);

/// |N+(u) intersect N+(v)| for two distinct vertices on the same side.
std::size_t common_out_neighbours(const GameDigraph& d, Side side, std::size_t u,
                                  std::size_t v);

/// ".wlg" text format: n, then n rows of A, a blank line, n rows of B.
WinLoseGame read_wlg(std::istream& in);
WinLoseGame read_wlg_file(const std::string& path);
void write_wlg(std::ostream& out, const WinLoseGame& game);
void write_wlg_file(const std::string& path, const WinLoseGame& game);

}  // namespace wlnash
