#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wlnash/game.hpp"
#include "wlnash/profile.hpp"
#include "wlnash/regime.hpp"

namespace wlnash {

enum class Outcome { PNE_Step1, StableCycle_Step2, LemkeHowson_Step3 };

std::string to_string(Outcome o);

struct RunOptions {
  /// Replace the cycle search in Step 2 by trying every l x l support pair
  /// with subgame_ne. Only sensible for small n.
  bool exhaustive_supports = false;
  std::size_t lh_label = 1;
  std::size_t cycle_budget = 0;  // 0 selects the default
  bool audit = false;            // pairing audit and Lemke-Howson basis audit
};

struct TrialRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double p = 0.0;
  Regime regime = Regime::Unproven;
  int plan_ell = 1;
  Outcome outcome = Outcome::PNE_Step1;
  int ell_used = 1;
  std::uint64_t wall_ns = 0;
  std::optional<std::size_t> pivots;
  bool verified = false;
  bool has_11 = false;
  std::optional<CycleCandidate> cycle;  // set when Step 2 used a stable cycle
};

struct RunResult {
  MixedProfile profile;
  TrialRecord record;
};

/// Plan used when none is forced: classify_regime for n >= 2; a PNE-only
/// plan for n = 1.
RegimePlan default_plan(std::size_t n, double p);

/// Step 1: pure equilibrium scan. Step 2 (plan.ell >= 2): for Regime2 and
/// GapI the pairing procedure runs first and its cycles are tested for
/// stability; then a stable 2l-cycle search (GapI tries l = 2 and l = 3),
/// with l > n skipped. Step 3: Lemke-Howson. The returned profile is checked
/// with verify_ne and the record says whether it passed.
RunResult run_generic(const WinLoseGame& game, const RegimePlan& plan,
                      const RunOptions& options = {});

struct BenchConfig {
  std::size_t n = 8;
  double p = 0.1;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  std::size_t threads = 1;
  std::optional<int> force_ell;
  std::optional<Regime> force_regime;
  RunOptions run;
  /// Write wall_ns as 0 so repeated runs are byte-identical.
  bool deterministic = false;
};

struct BenchSummary {
  std::size_t trials = 0;
  std::array<std::size_t, 3> step_counts{};
  std::size_t verified = 0;
  double empirical_p_no_11 = 0.0;
  double empirical_p_no_11_stderr = 0.0;
  double analytic_p_no_11 = 0.0;
  double mean_wall_ns = 0.0;
  double median_wall_ns = 0.0;
  double p99_wall_ns = 0.0;
  double fallback_rate = 0.0;
};

struct BenchResult {
  std::vector<TrialRecord> records;  // in seed order
  BenchSummary summary;
};

/// The plan a bench applies to every trial, after overrides.
RegimePlan bench_plan(const BenchConfig& config);

/// Runs trials on seeds base_seed .. base_seed + trials - 1.
BenchResult bench(const BenchConfig& config);

BenchSummary summarize(const std::vector<TrialRecord>& records, std::size_t n, double p);

inline constexpr const char* kCsvHeader = "seed,n,p,regime,ell,outcome,wall_ns,pivots,verified";
void write_csv_row(std::ostream& out, const TrialRecord& r);
void write_csv(std::ostream& out, const std::vector<TrialRecord>& records);

struct SweepReport {
  std::size_t n_max = 0;
  std::size_t games = 0;
  std::size_t runs = 0;
  std::array<std::size_t, 3> step_counts{};
  std::size_t stable_cycles = 0;     // Step-2 cycles turned into equilibria
  std::size_t pne_mismatches = 0;    // pne_search disagreeing with the oracle
  std::size_t failures = 0;          // unverified outputs or thrown errors
  std::vector<std::string> failure_notes;  // first few failures
};

/// Every win-lose game with 1 <= n <= n_max, each run with plans ell = 1, 2,
/// 3 and a GapI plan. Throws std::invalid_argument for n_max outside [1, 3].
SweepReport oracle_sweep(std::size_t n_max);

}  // namespace wlnash
