#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "support.hpp"
#include "wlnash/equilibrium.hpp"
#include "wlnash/harness.hpp"
#include "wlnash/json_io.hpp"

using namespace wlnash;
using wlnash::testing::four_cycle_game;
using wlnash::testing::random_game;

namespace {

RegimePlan plan_with_ell(int ell) {
  RegimePlan plan;
  plan.ell = ell;
  return plan;
}

}  // namespace

TEST(RunGeneric, PureEquilibriumFirst) {
  const auto g = WinLoseGame::from_rows({{0, 0}, {0, 1}}, {{0, 0}, {0, 1}});
  const auto r = run_generic(g, plan_with_ell(2));
  EXPECT_EQ(r.record.outcome, Outcome::PNE_Step1);
  EXPECT_EQ(r.profile, MixedProfile::pure(2, 1, 1));
  EXPECT_TRUE(r.record.verified);
  EXPECT_TRUE(r.record.has_11);
  EXPECT_FALSE(r.record.pivots);
}

TEST(RunGeneric, FourCycleInStepTwo) {
  const auto r = run_generic(four_cycle_game(), plan_with_ell(2));
  EXPECT_EQ(r.record.outcome, Outcome::StableCycle_Step2);
  EXPECT_EQ(r.record.ell_used, 2);
  Rational half(1, 2);
  EXPECT_EQ(r.profile.p, (std::vector<Rational>{half, half}));
  EXPECT_TRUE(r.record.verified);
  ASSERT_TRUE(r.record.cycle);
}

TEST(RunGeneric, FallsBackToLemkeHowson) {
  const auto r = run_generic(four_cycle_game(), plan_with_ell(1));
  EXPECT_EQ(r.record.outcome, Outcome::LemkeHowson_Step3);
  ASSERT_TRUE(r.record.pivots);
  EXPECT_GT(*r.record.pivots, 0u);
  EXPECT_TRUE(r.record.verified);
}

TEST(RunGeneric, ExhaustiveSupportsAgree) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const auto g = random_game(rng, n, 0.3);
    const RegimePlan plan = plan_with_ell(2);
    const auto fast = run_generic(g, plan);
    const auto slow = run_generic(g, plan, RunOptions{true, 1, 0, false});
    ASSERT_TRUE(fast.record.verified);
    ASSERT_TRUE(slow.record.verified);
    // A stable 4-cycle gives a 2x2 equilibrium, so the literal search also
    // stops in Step 2.
    if (fast.record.outcome == Outcome::StableCycle_Step2)
      ASSERT_EQ(slow.record.outcome, Outcome::StableCycle_Step2);
  }
}

TEST(RunGeneric, RandomGamesAllPlansVerify) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 60;
    const double p = std::pow(static_cast<double>(n), -std::uniform_real_distribution<double>(0.3, 1.0)(rng));
    const auto g = random_game(rng, n, p);
    for (const RegimePlan& plan : {default_plan(n, p), plan_with_ell(1), plan_with_ell(3)}) {
      const auto r = run_generic(g, plan, RunOptions{false, 1, 0, true});
      ASSERT_TRUE(r.record.verified) << "n=" << n << " p=" << p;
    }
  }
}

TEST(Bench, ReproducibleCsv) {
  BenchConfig c;
  c.n = 40;
  c.p = 0.05;
  c.trials = 30;
  c.base_seed = 1000;
  c.deterministic = true;
  std::ostringstream a, b;
  write_csv(a, bench(c).records);
  c.threads = 3;
  write_csv(b, bench(c).records);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), kCsvHeader);
}

TEST(Bench, SingleTrialSummary) {
  BenchConfig c;
  c.n = 10;
  c.p = 0.2;
  c.base_seed = 5;
  const auto res = bench(c);
  ASSERT_EQ(res.records.size(), 1u);
  EXPECT_EQ(res.summary.trials, 1u);
  EXPECT_EQ(res.summary.verified, 1u);
  EXPECT_EQ(res.records[0].seed, 5u);
  EXPECT_EQ(res.summary.median_wall_ns, static_cast<double>(res.records[0].wall_ns));
  EXPECT_EQ(res.summary.p99_wall_ns, static_cast<double>(res.records[0].wall_ns));
  c.trials = 0;
  EXPECT_THROW(bench(c), std::invalid_argument);
}

TEST(Bench, PlannedEllNeverWorseThanPureOnly) {
  BenchConfig c;
  c.n = 60;
  c.p = std::pow(60.0, -0.75);
  c.trials = 200;
  c.base_seed = 77;
  c.force_ell = 1;
  const auto pure_only = bench(c).summary;
  c.force_ell.reset();
  const auto planned = bench(c).summary;
  EXPECT_EQ(pure_only.step_counts[0], planned.step_counts[0]);
  EXPECT_LE(planned.step_counts[2], pure_only.step_counts[2]);
  EXPECT_EQ(planned.verified, 200u);
}

TEST(Bench, DenseRegimeRarelyFallsBack) {
  BenchConfig c;
  c.n = 200;
  c.p = 0.9 / std::sqrt(200.0);
  c.trials = 100;
  c.base_seed = 3;
  const auto s = bench(c).summary;
  EXPECT_LE(s.fallback_rate, 0.02);
  EXPECT_EQ(s.verified, 100u);
  EXPECT_NEAR(s.empirical_p_no_11, s.analytic_p_no_11, 0.05);
}

TEST(Bench, ForcedOverrides) {
  BenchConfig c;
  c.n = 100;
  c.p = 0.01;
  c.force_ell = 3;
  c.force_regime = Regime::Regime2;
  const auto plan = bench_plan(c);
  EXPECT_EQ(plan.ell, 3);
  EXPECT_EQ(plan.regime, Regime::Regime2);
  EXPECT_TRUE(plan.regime2);
  c.force_ell = 0;
  EXPECT_THROW(bench_plan(c), std::invalid_argument);
}

TEST(Csv, RowFormat) {
  TrialRecord r;
  r.seed = 9;
  r.n = 4;
  r.p = 0.1;
  r.regime = Regime::Unproven;
  r.ell_used = 1;
  r.outcome = Outcome::PNE_Step1;
  r.wall_ns = 12;
  r.verified = true;
  std::ostringstream out;
  write_csv_row(out, r);
  EXPECT_EQ(out.str(), "9,4,0.10000000000000001,Unproven,1,PNE_Step1,12,,true\n");
  r.pivots = 7;
  r.outcome = Outcome::LemkeHowson_Step3;
  out.str("");
  write_csv_row(out, r);
  EXPECT_EQ(out.str(), "9,4,0.10000000000000001,Unproven,1,LemkeHowson_Step3,12,7,true\n");
}

TEST(OracleSweep, OneByOne) {
  const auto rep = oracle_sweep(1);
  EXPECT_EQ(rep.games, 4u);
  EXPECT_EQ(rep.runs, 12u);
  EXPECT_EQ(rep.failures, 0u);
  EXPECT_EQ(rep.pne_mismatches, 0u);
}

TEST(OracleSweep, UpToTwo) {
  const auto rep = oracle_sweep(2);
  EXPECT_EQ(rep.games, 4u + 256u);
  EXPECT_EQ(rep.failures, 0u) << (rep.failure_notes.empty() ? "" : rep.failure_notes[0]);
  EXPECT_EQ(rep.pne_mismatches, 0u);
  EXPECT_GT(rep.stable_cycles, 0u);
  EXPECT_GT(rep.step_counts[2], 0u);
  EXPECT_THROW(oracle_sweep(4), std::invalid_argument);
  EXPECT_THROW(oracle_sweep(0), std::invalid_argument);
}

TEST(Json, ProfileRoundTrip) {
  const auto r = run_generic(four_cycle_game(), plan_with_ell(2));
  const Json j = to_json(r.profile);
  EXPECT_EQ(j["p"][0], "1/2");
  EXPECT_EQ(profile_from_json(Json::parse(j.dump())), r.profile);
  EXPECT_THROW(profile_from_json(Json::parse(R"({"p": ["x"], "q": ["1"]})")),
               std::invalid_argument);
}

TEST(Json, PlanAndRecord) {
  const Json plan = to_json(classify_regime(1000, 0.01));
  for (const char* key : {"regime", "ell", "delta", "clh", "fallback", "l1", "l2", "members",
                          "d_localize", "m_truncate", "kappa"})
    EXPECT_TRUE(plan.contains(key)) << key;
  const auto r = run_generic(four_cycle_game(), plan_with_ell(1));
  const Json rec = to_json(r.record);
  EXPECT_EQ(rec["outcome"], "LemkeHowson_Step3");
  const Json b = bounds_report(100, 0.01, 2);
  EXPECT_TRUE(b.is_object());
}
