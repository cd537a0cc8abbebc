#pragma once

#include <optional>

#include "wlnash/regime.hpp"

namespace wlnash {

/// A probability-style bound evaluated in natural-log space. `value` is the
/// unclamped bound (it may exceed 1, or overflow to +inf); `vacuous` is set
/// whenever it exceeds 1.
struct BoundValue {
  double value = 0.0;
  double log_value = 0.0;
  bool vacuous = false;

  double clamped() const { return value > 1.0 ? 1.0 : value; }
};

/// Builds a BoundValue from its logarithm.
BoundValue bound_from_log(long double log_value);

/// (1 - p^2)^{n^2}.
BoundValue p_no_11_entry(double n, double p);

/// 1 - (1 - (1 - (1-p)^n)^n)^2.
BoundValue p_no_zero_row_col_pne(double n, double p);

/// (e l / beta * n^{2l} p^{2l+2})^{beta n}. Throws std::invalid_argument
/// unless 0 < beta and beta * ell < 1.
BoundValue unstable_pack_bound(double n, double p, int ell, double beta);

struct FewCyclesBound {
  BoundValue bound;
  /// l / sqrt(n p); the estimate presumes this is small.
  double hypothesis_ratio = 0.0;
  /// log of ([ceil(n/2)]_l)^2 p^{2l} / (2l).
  double log_mu = 0.0;
};

/// (4^n/n) exp(-(np)^{2l} / (6 l 2^{2l})) + (4^n/n) exp(-n^2 p / (150 l^8)).
FewCyclesBound few_cycles_bound(double n, double p, int ell);

/// e^{-np} (e n p / t)^t. Throws std::invalid_argument unless t > n p.
BoundValue binom_tail_bound(double n, double p, double t);

/// (e^4 2^20 n^2 p^2 / (27 t))^t with t = n / 100.
BoundValue pairing_fail_bound(double n, double p);

/// 2 n p1^2 + 4 (1 + delta) n p0 p1. Throws std::invalid_argument on
/// negative input.
BoundValue sprinkle_destabilize_bound(double n, double p0, double p1, double delta);

/// Natural logs of the three running-time terms: T0 = e^{-n^2p^2} C(n,l)^2 n^3,
/// T1 = c^n * few_cycles_bound, T2 = c^n * unstable_pack_bound(beta = 1/(2l)).
struct RuntimeTerms {
  double log_t0 = 0.0;
  double log_t1 = 0.0;
  double log_t2 = 0.0;
};

RuntimeTerms runtime_terms(double n, double p, int ell, double clh = kLemkeHowsonBase);

}  // namespace wlnash
