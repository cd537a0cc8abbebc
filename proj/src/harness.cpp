#include "wlnash/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "wlnash/bounds.hpp"
#include "wlnash/cycles.hpp"
#include "wlnash/equilibrium.hpp"
#include "wlnash/lemke_howson.hpp"

namespace wlnash {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::PNE_Step1: return "PNE_Step1";
    case Outcome::StableCycle_Step2: return "StableCycle_Step2";
    case Outcome::LemkeHowson_Step3: return "LemkeHowson_Step3";
  }
  return "LemkeHowson_Step3";
}

RegimePlan default_plan(std::size_t n, double p) {
  if (n >= 2) return classify_regime(n, p);
  RegimePlan plan;
  plan.regime = Regime::Unproven;
  plan.ell = 1;
  plan.delta = std::nan("");
  return plan;
}

namespace {

bool has_11_entry(const WinLoseGame& g) {
  const auto& a = g.a_bits();
  const auto& b = g.b_bits();
  for (std::size_t i = 0; i < g.n(); ++i)
    if (and_count(a.row(i), b.row(i)) > 0) return true;
  return false;
}

std::uint64_t binom_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > cap) return cap + 1;
  }
  return c;
}

// Literal Step 2: every l x l support pair, lexicographic. Gives up (nullopt)
// when there are more than a million pairs.
std::optional<std::pair<MixedProfile, CycleCandidate>> exhaustive_step2(const WinLoseGame& g,
                                                                        std::size_t ell) {
  const std::size_t n = g.n();
  const std::uint64_t sets = binom_capped(n, ell, 1000);
  if (sets > 1000) return std::nullopt;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> idx(ell);
  for (std::size_t k = 0; k < ell; ++k) idx[k] = k;
  while (true) {
    subsets.push_back(idx);
    std::size_t k = ell;
    while (k > 0 && idx[k - 1] == n - ell + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < ell; ++t) idx[t] = idx[t - 1] + 1;
  }
  for (const auto& rows : subsets) {
    for (const auto& cols : subsets) {
      const MixedProfile sub = subgame_ne(g, SubgameSelection{rows, cols});
      MixedProfile full;
      full.p.assign(n, 0);
      full.q.assign(n, 0);
      for (std::size_t k = 0; k < ell; ++k) {
        full.p[rows[k]] = sub.p[k];
        full.q[cols[k]] = sub.q[k];
      }
      if (verify_ne(g, full).is_ne) return std::make_pair(full, CycleCandidate{rows, cols});
    }
  }
  return std::nullopt;
}

}  // namespace

RunResult run_generic(const WinLoseGame& game, const RegimePlan& plan, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = game.n();
  RunResult out;
  TrialRecord& rec = out.record;
  rec.n = n;
  rec.regime = plan.regime;
  rec.plan_ell = plan.ell;
  rec.has_11 = has_11_entry(game);

  bool done = false;
  if (auto pne = pne_search(game)) {
    out.profile = MixedProfile::pure(n, pne->row, pne->col);
    rec.outcome = Outcome::PNE_Step1;
    rec.ell_used = 1;
    done = true;
  }

  if (!done && plan.ell >= 2) {
    const GameDigraph d = to_digraph(game);
    const bool pairing_first = plan.regime == Regime::Regime2 || plan.regime == Regime::GapI;
    if (pairing_first && plan.regime2) {
      const PairingState st = pairing_procedure(d, *plan.regime2, PairingOptions{options.audit});
      if (options.audit && st.audit.dead_reads != 0)
        throw std::logic_error("pairing procedure read a deleted arc");
      for (const auto& c : st.cycles) {
        if (is_stable_cycle(d, c).stable) {
          out.profile = mne_from_stable_cycle(game, c);
          rec.outcome = Outcome::StableCycle_Step2;
          rec.ell_used = 2;
          rec.cycle = c;
          done = true;
          break;
        }
      }
    }
    std::vector<std::size_t> ells;
    if (plan.regime == Regime::GapI)
      ells = {2, 3};
    else
      ells = {static_cast<std::size_t>(plan.ell)};
    for (std::size_t ell : ells) {
      if (done || ell > n || ell > kDefaultSubgameLimit) continue;
      if (options.exhaustive_supports) {
        if (auto hit = exhaustive_step2(game, ell)) {
          out.profile = std::move(hit->first);
          rec.outcome = Outcome::StableCycle_Step2;
          rec.ell_used = static_cast<int>(ell);
          done = true;
        }
        continue;
      }
      const auto res = find_stable_cycle(d, ell, options.cycle_budget);
      if (res.cycle) {
        out.profile = mne_from_stable_cycle(game, *res.cycle);
        rec.outcome = Outcome::StableCycle_Step2;
        rec.ell_used = static_cast<int>(ell);
        rec.cycle = res.cycle;
        done = true;
      }
    }
  }

  if (!done) {
    const auto lh = solve_lh(game, options.lh_label, LhOptions{1, options.audit});
    out.profile = lh.profile;
    rec.outcome = Outcome::LemkeHowson_Step3;
    rec.ell_used = static_cast<int>(std::max(out.profile.support_p().size(),
                                             out.profile.support_q().size()));
    rec.pivots = lh.pivots;
  }

  rec.verified = verify_ne(game, out.profile).is_ne;
  rec.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
          .count());
  return out;
}

RegimePlan bench_plan(const BenchConfig& config) {
  RegimePlan plan = default_plan(config.n, config.p);
  if (config.force_regime) plan.regime = *config.force_regime;
  if (config.force_ell) {
    if (*config.force_ell < 1) throw std::invalid_argument("forced ell must be >= 1");
    plan.ell = *config.force_ell;
  }
  if (config.force_regime == Regime::Regime2 && !plan.regime2 && config.p > 0 && config.p < 1)
    plan.regime2 = regime2_params(config.n, config.p);
  return plan;
}

BenchResult bench(const BenchConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("bench needs at least one trial");
  const RegimePlan plan = bench_plan(config);
  BenchResult result;
  result.records.resize(config.trials);

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed) {
      const std::size_t k = next++;
      if (k >= config.trials) return;
      try {
        const std::uint64_t seed = config.base_seed + k;
        const WinLoseGame g = generate_game(GenParams{config.n, config.p, seed});
        TrialRecord rec = run_generic(g, plan, config.run).record;
        rec.seed = seed;
        rec.p = config.p;
        if (config.deterministic) rec.wall_ns = 0;
        result.records[k] = std::move(rec);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(config.threads, 1, config.trials);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  result.summary = summarize(result.records, config.n, config.p);
  return result;
}

BenchSummary summarize(const std::vector<TrialRecord>& records, std::size_t n, double p) {
  BenchSummary s;
  s.trials = records.size();
  if (s.trials == 0) return s;
  std::size_t no_11 = 0;
  std::vector<std::uint64_t> times;
  times.reserve(records.size());
  double total = 0;
  for (const auto& r : records) {
    ++s.step_counts[static_cast<std::size_t>(r.outcome)];
    if (r.verified) ++s.verified;
    if (!r.has_11) ++no_11;
    times.push_back(r.wall_ns);
    total += static_cast<double>(r.wall_ns);
  }
  const double trials = static_cast<double>(s.trials);
  s.empirical_p_no_11 = static_cast<double>(no_11) / trials;
  s.empirical_p_no_11_stderr =
      std::sqrt(s.empirical_p_no_11 * (1 - s.empirical_p_no_11) / trials);
  s.analytic_p_no_11 = p_no_11_entry(static_cast<double>(n), p).value;
  std::sort(times.begin(), times.end());
  s.mean_wall_ns = total / trials;
  const std::size_t mid = times.size() / 2;
  s.median_wall_ns = times.size() % 2 ? static_cast<double>(times[mid])
                                      : 0.5 * static_cast<double>(times[mid - 1] + times[mid]);
  const std::size_t p99 =
      static_cast<std::size_t>(std::ceil(0.99 * trials)) - 1;
  s.p99_wall_ns = static_cast<double>(times[std::min(p99, times.size() - 1)]);
  s.fallback_rate = static_cast<double>(s.step_counts[2]) / trials;
  return s;
}

void write_csv_row(std::ostream& out, const TrialRecord& r) {
  char pbuf[32];
  std::snprintf(pbuf, sizeof pbuf, "%.17g", r.p);
  out << r.seed << ',' << r.n << ',' << pbuf << ',' << to_string(r.regime) << ',' << r.ell_used
      << ',' << to_string(r.outcome) << ',' << r.wall_ns << ',';
  if (r.pivots) out << *r.pivots;
  out << ',' << (r.verified ? "true" : "false") << '\n';
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) write_csv_row(out, r);
}

SweepReport oracle_sweep(std::size_t n_max) {
  if (n_max < 1 || n_max > 3) throw std::invalid_argument("oracle sweep supports n_max in [1, 3]");
  SweepReport rep;
  rep.n_max = n_max;

  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<RegimePlan> plans;
    for (int ell = 1; ell <= 3; ++ell) {
      RegimePlan plan;
      plan.regime = Regime::Unproven;
      plan.ell = ell;
      plans.push_back(plan);
    }
    if (n >= 2) {
      RegimePlan gap;
      gap.regime = Regime::GapI;
      gap.ell = 2;
      gap.regime2 = regime2_params(n, 0.5);
      plans.push_back(gap);
    }

    const std::size_t cells = n * n;
    const std::uint64_t total = std::uint64_t{1} << (2 * cells);
    for (std::uint64_t code = 0; code < total; ++code) {
      BitMatrix a(n, n), b(n, n);
      for (std::size_t k = 0; k < cells; ++k) {
        if ((code >> k) & 1U) a.set(k / n, k % n);
        if ((code >> (cells + k)) & 1U) b.set(k / n, k % n);
      }
      const WinLoseGame g(a, b);
      ++rep.games;

      bool any_pure = false;
      for (std::size_t i = 0; i < n && !any_pure; ++i)
        for (std::size_t j = 0; j < n && !any_pure; ++j) any_pure = is_pure_ne(g, PurePair{i, j});
      const auto found = pne_search(g);
      if (found.has_value() != any_pure || (found && !is_pure_ne(g, *found))) ++rep.pne_mismatches;

      for (const auto& plan : plans) {
        ++rep.runs;
        try {
          const RunResult r = run_generic(g, plan, RunOptions{false, 1, 0, true});
          ++rep.step_counts[static_cast<std::size_t>(r.record.outcome)];
          if (r.record.cycle) ++rep.stable_cycles;
          if (!r.record.verified) {
            ++rep.failures;
            if (rep.failure_notes.size() < 10)
              rep.failure_notes.push_back("unverified output, n=" + std::to_string(n) +
                                          " code=" + std::to_string(code));
          }
        } catch (const std::exception& e) {
          ++rep.failures;
          if (rep.failure_notes.size() < 10)
            rep.failure_notes.push_back("n=" + std::to_string(n) + " code=" +
                                        std::to_string(code) + ": " + e.what());
        }
      }
    }
  }
  return rep;
}

}  // namespace wlnash
