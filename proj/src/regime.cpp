#include "wlnash/regime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wlnash {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Regime0Low: return "Regime0Low";
    case Regime::Regime1: return "Regime1";
    case Regime::GapI: return "GapI";
    case Regime::GapII: return "GapII";
    case Regime::Regime2: return "Regime2";
    case Regime::Regime0High: return "Regime0High";
    case Regime::Unproven: return "Unproven";
  }
  return "Unproven";
}

Regime regime_from_string(const std::string& name) {
  for (Regime r : {Regime::Regime0Low, Regime::Regime1, Regime::GapI, Regime::GapII,
                   Regime::Regime2, Regime::Regime0High, Regime::Unproven})
    if (to_string(r) == name) return r;
  throw std::invalid_argument("unknown regime: " + name);
}

double low_threshold_constant(double clh) { return std::floor(1e4 / clh) / 1e4; }

double high_threshold_constant(double clh) {
  return std::floor(1e3 * std::sqrt(std::log(clh))) / 1e3;
}

double delta_of(double n, double p) {
  if (!(n >= 2.0)) throw std::invalid_argument("delta needs n >= 2");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("delta is undefined for p outside (0, 1)");
  return 1.0 + std::log(p) / std::log(n);
}

EllWindow ell_window(double n, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("ell window needs 0 < delta < 1");
  const double log_n = std::log(n);
  if (!(delta * log_n > 2.0)) throw std::domain_error("window undefined at this n");

  EllWindow w;
  w.l1 = 1.0 / (2.0 * delta) / (1.0 - 2.0 / (delta * log_n));
  w.l2 = (log_n + 2.0) / (delta * log_n + 2.0) - 1.0;

  // Membership is decided by the defining inequalities; [l1, l2] only bounds
  // the scan.
  const int lo = std::max(1, static_cast<int>(std::floor(w.l1)) - 1);
  const int hi = static_cast<int>(std::ceil(std::max(w.l2, 0.0))) + 1;
  for (int l = lo; l <= hi; ++l) {
    const double ld = l;
    const bool lower_ok = (1.0 / (2.0 * ld)) * (1.0 + 4.0 * ld / log_n) <= delta;
    const bool upper_ok = delta <= (1.0 / (1.0 + ld)) * (1.0 - 2.0 * ld / log_n);
    if (lower_ok && upper_ok) w.members.push_back(l);
  }
  return w;
}

Regime2Params regime2_params(std::uint64_t n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("regime-2 parameters need 0 < p < 1");
  const double nd = static_cast<double>(n);
  Regime2Params r;
  r.kappa = 1.0 / (nd * nd * p * p * p * p);
  const double raw_d = std::floor(std::ldexp(r.kappa, 20));
  const double cap = n > 0 ? nd - 1.0 : 0.0;
  r.d_localize = static_cast<std::size_t>(std::min(raw_d, cap));
  r.m_truncate = static_cast<std::size_t>(std::ceil(4.0 * nd * p));
  return r;
}

int fallback_ell(double delta) {
  if (std::isnan(delta) || delta >= 0.25) return 2;
  for (int l = 2; l <= 6; ++l)
    if (1.0 / (2.0 * l) <= delta && delta <= 1.0 / (1.0 + l)) return l;
  return 2;
}

RegimePlan classify_regime(std::uint64_t n, double p) {
  if (n < 2) throw std::invalid_argument("classification needs n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");

  const double nd = static_cast<double>(n);
  const double log_n = std::log(nd);
  RegimePlan plan;
  plan.delta = (p > 0.0 && p < 1.0) ? delta_of(nd, p) : std::numeric_limits<double>::quiet_NaN();
  if (p > 0.0 && p < 1.0) plan.regime2 = regime2_params(n, p);
  if (plan.delta > 0.0 && plan.delta < 1.0 && plan.delta * log_n > 2.0)
    plan.window = ell_window(nd, plan.delta);

  const double c_low = low_threshold_constant(plan.clh);
  const double c_high = high_threshold_constant(plan.clh);
  const double n_2_3 = std::pow(nd, -2.0 / 3.0);
  const double n_3_4 = std::pow(nd, -0.75);

  const double r1_lo = std::pow(log_n, 9.0) / nd;
  const double r1_hi = std::exp(-4.0 / 3.0) * n_2_3;
  const double g2_lo = n_3_4 * std::exp(1.5);  // n^{-3/4 + 3/(2 log n)}
  const double g2_hi = n_3_4 * std::exp(2.0);  // n^{-3/4 + 2/log n}
  const double g1_hi = 512.0 * n_2_3;
  const double r2_hi = std::exp(-52.0) * std::ldexp(1.0, -8) / std::sqrt(nd);
  const double r0_hi = c_high / std::sqrt(nd);

  if (p <= c_low / nd) {
    plan.regime = Regime::Regime0Low;
    plan.ell = 1;
  } else if (r1_lo <= p && p <= r1_hi) {
    if (g2_lo < p && p < g2_hi) {
      plan.regime = Regime::GapII;
      plan.ell = 3;
    } else {
      plan.regime = Regime::Regime1;
      if (plan.window && !plan.window->members.empty()) {
        plan.ell = plan.window->members.front();
      } else {
        plan.ell = fallback_ell(plan.delta);
        plan.fallback = true;
      }
    }
  } else if (r1_hi <= p && p <= g1_hi) {
    plan.regime = Regime::GapI;
    plan.ell = 2;
  } else if (g1_hi <= p && p <= r2_hi) {
    plan.regime = Regime::Regime2;
    plan.ell = 2;
  } else if (p >= r0_hi) {
    plan.regime = Regime::Regime0High;
    plan.ell = 1;
  } else {
    plan.regime = Regime::Unproven;
    plan.ell = fallback_ell(plan.delta);
    plan.fallback = true;
  }
  return plan;
}

}  // namespace wlnash
