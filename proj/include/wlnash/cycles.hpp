#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wlnash/game.hpp"
#include "wlnash/regime.hpp"

namespace wlnash {

/// An outside vertex that is a common out-neighbour of two cycle vertices.
struct InstabilityWitness {
  Side outside_side = Side::C;
  std::size_t outside = 0;
  std::size_t first = 0;   // cycle vertices, on the opposite side
  std::size_t second = 0;
  friend bool operator==(const InstabilityWitness&, const InstabilityWitness&) = default;
};

struct StabilityReport {
  bool stable = true;
  std::optional<InstabilityWitness> witness;
};

/// True iff all 2l arcs of the cycle are present and indices are distinct
/// within each side.
bool is_directed_cycle(const GameDigraph& d, const CycleCandidate& c);

/// Stability: every outside column receives arcs from at most one cycle
/// row, and every outside row from at most one cycle column. Chords among
/// cycle vertices are allowed. Throws std::invalid_argument when c is not a
/// directed cycle of d.
StabilityReport is_stable_cycle(const GameDigraph& d, const CycleCandidate& c);

enum class SearchStatus { Found, Exhausted, BudgetHit };

struct CycleSearchResult {
  std::optional<CycleCandidate> cycle;
  SearchStatus status = SearchStatus::Exhausted;
  std::size_t visits = 0;
  std::size_t cycles_tested = 0;
};

/// Default node-visit cap: 50 n l.
std::size_t default_cycle_budget(std::size_t n, std::size_t ell);

/// Depth-first enumeration of directed 2l-cycles, rooted at their smallest
/// row index, testing each complete cycle for stability. `ell == 1` reduces
/// to the mutual-arc scan. A budget of 0 selects the default.
CycleSearchResult find_stable_cycle(const GameDigraph& d, std::size_t ell,
                                    std::size_t budget = 0);

/// Arc-exposure bookkeeping for the pairing procedure.
struct ArcAudit {
  std::size_t exposed = 0;        // arcs revealed
  std::size_t deleted = 0;        // arcs explicitly removed
  std::size_t dead_reads = 0;     // exposures of a deleted arc or removed vertex
};

struct PairingOptions {
  /// Cross-check every exposure against an independent log of deletions.
  bool audit = false;
};

struct PairingState {
  std::vector<CycleCandidate> cycles;   // disjoint 4-cycles (r_i, c_p, r_j, c_q)
  std::optional<PurePair> pne;
  std::vector<std::size_t> frontier;    // rows still unconsumed at exit
  std::vector<bool> c_available;
  ArcAudit audit;
};

/// Greedy localized pairing scan over R in index order with truncated arc
/// exposure: pairs r_i with a live r_j, 0 < j - i <= d_localize, through a
/// 4-cycle r_i -> c_p -> r_j -> c_q -> r_i, or stops at an exposed mutual arc.
PairingState pairing_procedure(const GameDigraph& d, const Regime2Params& params,
                               const PairingOptions& options = {});

/// Number of row pairs (i, j), 0 < j - i <= window, with >= 3 common
/// out-neighbours.
std::size_t bad_pair_count(const GameDigraph& d, std::size_t window);

}  // namespace wlnash
