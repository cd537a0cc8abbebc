#include "wlnash/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wlnash {

namespace {

using Real = long double;

constexpr Real kInf = std::numeric_limits<Real>::infinity();

void check_np(double n, double p) {
  if (!(n >= 1.0) || !std::isfinite(n)) throw std::invalid_argument("n must be a finite value >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

void check_ell(int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
}

// log(a) with log(0) = -inf.
Real safe_log(Real a) { return a > 0 ? std::log(a) : -kInf; }

// log(e^a + e^b).
Real log_add(Real a, Real b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const Real hi = a > b ? a : b;
  const Real lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

// log of the falling factorial m (m-1) ... (m-k+1); -inf when k > m.
Real log_falling(Real m, int k) {
  Real s = 0;
  for (int i = 0; i < k; ++i) {
    if (m - i <= 0) return -kInf;
    s += std::log(m - i);
  }
  return s;
}

}  // namespace

BoundValue bound_from_log(long double log_value) {
  BoundValue b;
  b.log_value = static_cast<double>(log_value);
  b.value = static_cast<double>(std::exp(log_value));
  b.vacuous = log_value > 0;
  return b;
}

BoundValue p_no_11_entry(double n, double p) {
  check_np(n, p);
  const Real pp = static_cast<Real>(p) * p;
  return bound_from_log(static_cast<Real>(n) * n * std::log1p(-pp));
}

BoundValue p_no_zero_row_col_pne(double n, double p) {
  check_np(n, p);
  // b = (1 - (1-p)^n)^n, result 1 - (1-b)^2 = b (2 - b).
  const Real a = std::exp(static_cast<Real>(n) * std::log1p(-static_cast<Real>(p)));
  const Real log_b = static_cast<Real>(n) * std::log1p(-a);
  const Real b = std::exp(log_b);
  return bound_from_log(log_b + std::log(2 - b));
}

BoundValue unstable_pack_bound(double n, double p, int ell, double beta) {
  check_np(n, p);
  check_ell(ell);
  if (!(beta > 0.0) || !(beta * ell < 1.0))
    throw std::invalid_argument("need 0 < beta and beta * ell < 1");
  const Real l = ell;
  const Real inner = 1 + std::log(l) - std::log(static_cast<Real>(beta)) +
                     2 * l * std::log(static_cast<Real>(n)) + (2 * l + 2) * safe_log(p);
  return bound_from_log(static_cast<Real>(beta) * n * inner);
}

FewCyclesBound few_cycles_bound(double n, double p, int ell) {
  check_np(n, p);
  check_ell(ell);
  const Real rn = n, rp = p, l = ell;
  const Real log_prefix = rn * std::log(Real{4}) - std::log(rn);
  const Real np = rn * rp;
  const Real e1 = np > 0 ? -std::exp(2 * l * std::log(np) - std::log(6 * l) - 2 * l * std::log(Real{2}))
                         : Real{0};
  const Real e2 = -(rn * rn * rp) / (150 * std::pow(l, 8));
  FewCyclesBound out;
  out.bound = bound_from_log(log_add(log_prefix + e1, log_prefix + e2));
  out.hypothesis_ratio = np > 0 ? static_cast<double>(l / std::sqrt(np))
                                : std::numeric_limits<double>::infinity();
  out.log_mu = static_cast<double>(2 * log_falling(std::ceil(rn / 2), ell) +
                                   2 * l * safe_log(rp) - std::log(2 * l));
  return out;
}

BoundValue binom_tail_bound(double n, double p, double t) {
  check_np(n, p);
  const Real np = static_cast<Real>(n) * p;
  if (!(t > np) || !std::isfinite(t)) throw std::invalid_argument("binomial tail needs t > n p");
  const Real rt = t;
  if (np == 0) return bound_from_log(-kInf);
  return bound_from_log(-np + rt * (1 + std::log(np) - std::log(rt)));
}

BoundValue pairing_fail_bound(double n, double p) {
  check_np(n, p);
  const Real t = static_cast<Real>(n) / 100;
  const Real inner = 4 + 20 * std::log(Real{2}) + 2 * std::log(static_cast<Real>(n)) +
                     2 * safe_log(p) - std::log(Real{27}) - std::log(t);
  return bound_from_log(t * inner);
}

BoundValue sprinkle_destabilize_bound(double n, double p0, double p1, double delta) {
  if (!(n >= 0) || !(p0 >= 0) || !(p1 >= 0) || !(delta >= 0))
    throw std::invalid_argument("sprinkling bound inputs must be nonnegative");
  const Real v = 2 * static_cast<Real>(n) * p1 * p1 +
                 4 * (1 + static_cast<Real>(delta)) * n * p0 * p1;
  BoundValue b;
  b.value = static_cast<double>(v);
  b.log_value = static_cast<double>(safe_log(v));
  b.vacuous = v > 1;
  return b;
}

RuntimeTerms runtime_terms(double n, double p, int ell, double clh) {
  check_np(n, p);
  check_ell(ell);
  const Real rn = n, rp = p;
  Real log_binom = log_falling(rn, ell);
  for (int k = 2; k <= ell; ++k) log_binom -= std::log(static_cast<Real>(k));
  RuntimeTerms out;
  out.log_t0 = static_cast<double>(-rn * rn * rp * rp + 2 * log_binom + 3 * std::log(rn));
  const Real lc = rn * std::log(static_cast<Real>(clh));
  out.log_t1 = static_cast<double>(lc + few_cycles_bound(n, p, ell).bound.log_value);
  out.log_t2 = static_cast<double>(
      lc + unstable_pack_bound(n, p, ell, 1.0 / (2.0 * ell)).log_value);
  return out;
}

}  // namespace wlnash
