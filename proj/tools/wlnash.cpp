// wlnash command line tool.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "wlnash/bounds.hpp"
#include "wlnash/cycles.hpp"
#include "wlnash/equilibrium.hpp"
#include "wlnash/game.hpp"
#include "wlnash/harness.hpp"
#include "wlnash/json_io.hpp"
#include "wlnash/lemke_howson.hpp"
#include "wlnash/regime.hpp"

using namespace wlnash;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

WinLoseGame load_game(const std::string& path) {
  try {
    return read_wlg_file(path);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash equilibria of win-lose bimatrix games"};
  app.require_subcommand(1);

  // Shared option storage.
  std::uint64_t seed = 0;
  bool json = false;
  std::string out_path;
  std::size_t n = 0;
  double p = 0.0;
  std::string in_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed");
    sub->add_flag("--json", json, "Machine-readable JSON output");
    sub->add_option("--out", out_path, "Write output to FILE instead of stdout");
  };

  auto* gen = app.add_subcommand("gen", "Sample a random game and write it as .wlg");
  common(gen);
  gen->add_option("--n", n, "Number of strategies per player")->required();
  gen->add_option("--p", p, "Probability of each payoff being 1")->required();

  auto* plan_cmd = app.add_subcommand("plan", "Regime, support size and parameters for (n, p)");
  common(plan_cmd);
  plan_cmd->add_option("--n", n)->required();
  plan_cmd->add_option("--p", p)->required();

  std::optional<double> solve_p;
  std::optional<int> force_ell;
  std::optional<std::string> force_regime;
  std::size_t label = 1;
  std::size_t budget = 0;
  bool exhaustive = false;
  auto* solve = app.add_subcommand("solve", "Run the three-step solver on a game");
  common(solve);
  solve->add_option("--in", in_path, "Game file (.wlg)")->required();
  solve->add_option("--p", solve_p, "Density used for planning (default: empirical)");
  solve->add_option("--force-ell", force_ell, "Override the planned support size");
  solve->add_option("--force-regime", force_regime, "Override the planned regime");
  solve->add_option("--label", label, "Lemke-Howson dropped label (1..2n)");
  solve->add_option("--budget", budget, "Cycle search node budget (0 = default)");
  solve->add_flag("--exhaustive-supports", exhaustive, "Literal l x l support enumeration");

  std::size_t ell = 2;
  auto* cycles_cmd = app.add_subcommand("cycles", "Search for a stable 2l-cycle");
  common(cycles_cmd);
  cycles_cmd->add_option("--in", in_path)->required();
  cycles_cmd->add_option("--ell", ell, "Half the cycle length")->required();
  cycles_cmd->add_option("--budget", budget);

  auto* lh = app.add_subcommand("lh", "Lemke-Howson from the artificial equilibrium");
  common(lh);
  lh->add_option("--in", in_path)->required();
  lh->add_option("--label", label);

  std::string profile_path;
  auto* verify = app.add_subcommand("verify", "Check a profile against a game exactly");
  common(verify);
  verify->add_option("--game", in_path)->required();
  verify->add_option("--profile", profile_path)->required();

  std::size_t trials = 1;
  std::size_t threads = 1;
  bool deterministic = false;
  std::string summary_path;
  auto* bench_cmd = app.add_subcommand("bench", "Monte Carlo trials; CSV rows plus a summary");
  common(bench_cmd);
  bench_cmd->add_option("--n", n)->required();
  bench_cmd->add_option("--p", p)->required();
  bench_cmd->add_option("--trials", trials);
  bench_cmd->add_option("--threads", threads);
  bench_cmd->add_option("--force-ell", force_ell);
  bench_cmd->add_option("--force-regime", force_regime);
  bench_cmd->add_option("--label", label);
  bench_cmd->add_option("--budget", budget);
  bench_cmd->add_flag("--exhaustive-supports", exhaustive);
  bench_cmd->add_flag("--deterministic", deterministic, "Record wall_ns as 0");
  bench_cmd->add_option("--summary", summary_path, "Summary JSON file (default: stderr)");

  double bn = 0;
  int bell = 2;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every bound calculator");
  common(bounds_cmd);
  bounds_cmd->add_option("--n", bn)->required();
  bounds_cmd->add_option("--p", p)->required();
  bounds_cmd->add_option("--ell", bell);

  std::size_t n_max = 3;
  auto* sweep = app.add_subcommand("oracle-sweep", "Exhaustive check over all small games");
  common(sweep);
  sweep->add_option("--n-max", n_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Sink sink(out_path);
    std::ostream& out = sink.stream();

    if (*gen) {
      const WinLoseGame g = generate_game(GenParams{n, p, seed});
      if (json) {
        Json j{{"n", g.n()}, {"a", Json::array()}, {"b", Json::array()}};
        for (std::size_t i = 0; i < g.n(); ++i) {
          Json ra = Json::array(), rb = Json::array();
          for (std::size_t k = 0; k < g.n(); ++k) {
            ra.push_back(g.a(i, k) ? 1 : 0);
            rb.push_back(g.b(i, k) ? 1 : 0);
          }
          j["a"].push_back(ra);
          j["b"].push_back(rb);
        }
        print_json(out, j);
      } else {
        write_wlg(out, g);
      }
      return kExitOk;
    }

    if (*plan_cmd) {
      const RegimePlan plan = classify_regime(n, p);
      const Json j = to_json(plan);
      if (json) {
        print_json(out, j);
      } else {
        for (const auto& [k, v] : j.items()) out << k << ": " << v.dump() << '\n';
      }
      return kExitOk;
    }

    if (*solve) {
      const WinLoseGame g = load_game(in_path);
      BenchConfig cfg;
      cfg.n = g.n();
      cfg.p = solve_p.value_or(game_density(g));
      cfg.force_ell = force_ell;
      if (force_regime) cfg.force_regime = regime_from_string(*force_regime);
      const RegimePlan plan = bench_plan(cfg);
      const RunResult r =
          run_generic(g, plan, RunOptions{exhaustive, label, budget, false});
      TrialRecord rec = r.record;
      rec.seed = seed;
      rec.p = cfg.p;
      print_json(out, Json{{"plan", to_json(plan)}, {"record", to_json(rec)},
                           {"profile", to_json(r.profile)}});
      return rec.verified ? kExitOk : kExitVerify;
    }

    if (*cycles_cmd) {
      const WinLoseGame g = load_game(in_path);
      const GameDigraph d = to_digraph(g);
      const CycleSearchResult res = find_stable_cycle(d, ell, budget);
      static const char* names[] = {"Found", "Exhausted", "BudgetHit"};
      Json j{{"status", names[static_cast<int>(res.status)]},
             {"visits", res.visits},
             {"cycles_tested", res.cycles_tested},
             {"cycle", res.cycle ? to_json(*res.cycle) : Json(nullptr)}};
      if (res.cycle) j["profile"] = to_json(mne_from_stable_cycle(g, *res.cycle));
      print_json(out, j);
      return kExitOk;
    }

    if (*lh) {
      const WinLoseGame g = load_game(in_path);
      const LhResult r = solve_lh(g, label);
      const bool ok = verify_ne(g, r.profile).is_ne;
      Json j = to_json(r.profile);
      j["pivots"] = r.pivots;
      j["label"] = label;
      j["verified"] = ok;
      print_json(out, j);
      return ok ? kExitOk : kExitVerify;
    }

    if (*verify) {
      const WinLoseGame g = load_game(in_path);
      std::ifstream pf(profile_path);
      if (!pf) throw UsageError("cannot open " + profile_path);
      MixedProfile prof;
      try {
        prof = profile_from_json(Json::parse(pf));
      } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed profile JSON: ") + e.what());
      }
      const VerificationReport rep = verify_ne(g, prof);
      print_json(out, to_json(rep));
      return rep.is_ne ? kExitOk : kExitVerify;
    }

    if (*bench_cmd) {
      BenchConfig cfg;
      cfg.n = n;
      cfg.p = p;
      cfg.trials = trials;
      cfg.base_seed = seed;
      cfg.threads = threads;
      cfg.force_ell = force_ell;
      if (force_regime) cfg.force_regime = regime_from_string(*force_regime);
      cfg.run = RunOptions{exhaustive, label, budget, false};
      cfg.deterministic = deterministic;
      const BenchResult res = bench(cfg);
      write_csv(out, res.records);
      Json summary = to_json(res.summary);
      summary["plan"] = to_json(bench_plan(cfg));
      if (summary_path.empty()) {
        print_json(std::cerr, summary);
      } else {
        std::ofstream sf(summary_path);
        if (!sf) throw UsageError("cannot open " + summary_path + " for writing");
        print_json(sf, summary);
      }
      return res.summary.verified == res.summary.trials ? kExitOk : kExitVerify;
    }

    if (*bounds_cmd) {
      print_json(out, bounds_report(bn, p, bell));
      return kExitOk;
    }

    if (*sweep) {
      const SweepReport rep = oracle_sweep(n_max);
      print_json(out, to_json(rep));
      return rep.failures == 0 && rep.pne_mismatches == 0 ? kExitOk : kExitVerify;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitOk;
}
