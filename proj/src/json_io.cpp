#include "wlnash/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace wlnash {

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_fraction_string(x));
  return a;
}

std::vector<Rational> parse_side(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument(std::string("profile needs an array \"") + key + "\"");
  std::vector<Rational> out;
  for (const auto& x : j[key]) {
    if (x.is_string())
      out.push_back(parse_fraction(x.get<std::string>()));
    else if (x.is_number_integer())
      out.push_back(Rational(x.get<long>()));
    else
      throw std::invalid_argument("profile entries must be \"num/den\" strings or integers");
  }
  return out;
}

// JSON has no NaN or infinity; those become null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const MixedProfile& m) { return Json{{"p", rationals(m.p)}, {"q", rationals(m.q)}}; }

MixedProfile profile_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("profile must be a JSON object");
  return MixedProfile{parse_side(j, "p"), parse_side(j, "q")};
}

Json to_json(const RegimePlan& plan) {
  Json j{{"regime", to_string(plan.regime)},
         {"ell", plan.ell},
         {"delta", number(plan.delta)},
         {"clh", plan.clh},
         {"fallback", plan.fallback}};
  j["l1"] = plan.window ? number(plan.window->l1) : Json(nullptr);
  j["l2"] = plan.window ? number(plan.window->l2) : Json(nullptr);
  j["members"] = plan.window ? Json(plan.window->members) : Json(nullptr);
  j["d_localize"] = plan.regime2 ? Json(plan.regime2->d_localize) : Json(nullptr);
  j["m_truncate"] = plan.regime2 ? Json(plan.regime2->m_truncate) : Json(nullptr);
  j["kappa"] = plan.regime2 ? number(plan.regime2->kappa) : Json(nullptr);
  return j;
}

Json to_json(const CycleCandidate& c) { return Json{{"rows", c.rows}, {"cols", c.cols}}; }

Json to_json(const VerificationReport& r) {
  Json j{{"is_ne", r.is_ne},
         {"row_payoff", to_fraction_string(r.row_payoff)},
         {"col_payoff", to_fraction_string(r.col_payoff)}};
  if (r.best_deviation)
    j["best_deviation"] =
        Json{{"player", r.best_deviation->player == Player::Row ? "row" : "column"},
             {"strategy", r.best_deviation->strategy},
             {"gain", to_fraction_string(r.best_deviation->gain)}};
  else
    j["best_deviation"] = nullptr;
  return j;
}

Json to_json(const BoundValue& b) {
  return Json{{"value", number(b.value)}, {"log_value", number(b.log_value)}, {"vacuous", b.vacuous}};
}

Json to_json(const TrialRecord& r) {
  Json j{{"seed", r.seed},
         {"n", r.n},
         {"p", r.p},
         {"regime", to_string(r.regime)},
         {"plan_ell", r.plan_ell},
         {"outcome", to_string(r.outcome)},
         {"ell_used", r.ell_used},
         {"wall_ns", r.wall_ns},
         {"pivots", r.pivots ? Json(*r.pivots) : Json(nullptr)},
         {"verified", r.verified}};
  if (r.cycle) j["cycle"] = to_json(*r.cycle);
  return j;
}

Json to_json(const BenchSummary& s) {
  return Json{{"trials", s.trials},
              {"step_counts",
               {{"PNE_Step1", s.step_counts[0]},
                {"StableCycle_Step2", s.step_counts[1]},
                {"LemkeHowson_Step3", s.step_counts[2]}}},
              {"verified", s.verified},
              {"empirical_p_no_11", s.empirical_p_no_11},
              {"empirical_p_no_11_stderr", s.empirical_p_no_11_stderr},
              {"analytic_p_no_11", s.analytic_p_no_11},
              {"mean_wall_ns", s.mean_wall_ns},
              {"median_wall_ns", s.median_wall_ns},
              {"p99_wall_ns", s.p99_wall_ns},
              {"fallback_rate", s.fallback_rate}};
}

Json to_json(const SweepReport& s) {
  return Json{{"n_max", s.n_max},
              {"games", s.games},
              {"runs", s.runs},
              {"step_counts",
               {{"PNE_Step1", s.step_counts[0]},
                {"StableCycle_Step2", s.step_counts[1]},
                {"LemkeHowson_Step3", s.step_counts[2]}}},
              {"stable_cycles", s.stable_cycles},
              {"pne_mismatches", s.pne_mismatches},
              {"failures", s.failures},
              {"failure_notes", s.failure_notes}};
}

Json bounds_report(double n, double p, int ell) {
  Json j{{"n", n}, {"p", p}, {"ell", ell}};
  j["p_no_11_entry"] = to_json(p_no_11_entry(n, p));
  j["p_no_zero_row_col_pne"] = to_json(p_no_zero_row_col_pne(n, p));
  const double tau = 1.0 / (2.0 * ell);
  j["unstable_pack_bound"] = to_json(unstable_pack_bound(n, p, ell, tau));
  j["unstable_pack_bound"]["beta"] = tau;
  const FewCyclesBound fc = few_cycles_bound(n, p, ell);
  j["few_cycles_bound"] = to_json(fc.bound);
  j["few_cycles_bound"]["hypothesis_ratio"] = number(fc.hypothesis_ratio);
  j["few_cycles_bound"]["log_mu"] = number(fc.log_mu);
  // The bad-pair instance: Bin(n, p^2) >= 3.
  if (n * p * p < 3.0) {
    j["binom_tail_bound"] = to_json(binom_tail_bound(n, p * p, 3.0));
    j["binom_tail_bound"]["t"] = 3.0;
    j["binom_tail_bound"]["success_probability"] = p * p;
  } else {
    j["binom_tail_bound"] = nullptr;
  }
  j["pairing_fail_bound"] = to_json(pairing_fail_bound(n, p));
  const double p0 = p / 2.0;
  const double p1 = p0 < 1.0 ? (p - p0) / (1.0 - p0) : 0.0;
  const double delta0 = std::pow(n, -1.0 / 8.0);
  j["sprinkle_destabilize_bound"] = to_json(sprinkle_destabilize_bound(n, p0, p1, delta0));
  j["sprinkle_destabilize_bound"]["p0"] = p0;
  j["sprinkle_destabilize_bound"]["p1"] = p1;
  j["sprinkle_destabilize_bound"]["delta"] = delta0;
  const RuntimeTerms rt = runtime_terms(n, p, ell);
  j["runtime_terms"] = Json{{"log_t0", number(rt.log_t0)},
                            {"log_t1", number(rt.log_t1)},
                            {"log_t2", number(rt.log_t2)}};
  return j;
}

}  // namespace wlnash
