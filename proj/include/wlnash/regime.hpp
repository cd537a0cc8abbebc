#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wlnash {

/// Base of the Lemke-Howson running-time bound.
inline constexpr double kLemkeHowsonBase = 2.598;

enum class Regime { Regime0Low, Regime1, GapI, GapII, Regime2, Regime0High, Unproven };

std::string to_string(Regime r);
/// Accepts the names produced by to_string; throws std::invalid_argument otherwise.
Regime regime_from_string(const std::string& name);

struct EllWindow {
  double l1 = 0.0;
  double l2 = 0.0;
  std::vector<int> members;
};

struct Regime2Params {
  std::size_t d_localize = 0;
  std::size_t m_truncate = 0;
  double kappa = 0.0;
};

struct RegimePlan {
  Regime regime = Regime::Unproven;
  int ell = 1;
  double delta = 0.0;  // NaN when p is 0 or 1
  double clh = kLemkeHowsonBase;
  bool fallback = false;
  std::optional<EllWindow> window;
  std::optional<Regime2Params> regime2;
};

/// Table constants recomputed from the Lemke-Howson base: 1/c truncated to
/// four decimals (0.3849) and sqrt(log c) truncated to three (0.977).
double low_threshold_constant(double clh = kLemkeHowsonBase);
double high_threshold_constant(double clh = kLemkeHowsonBase);

/// delta with p = n^{-1+delta}. Throws for p in {0, 1} or n < 2.
double delta_of(double n, double p);

/// Integer support sizes l with
///   (1/(2l)) (1 + 4l/log n) <= delta <= (1/(1+l)) (1 - 2l/log n).
/// Throws std::domain_error when delta log n <= 2 (the lower end is singular).
EllWindow ell_window(double n, double delta);

/// Regime lookup by the first matching row of the results table; boundary
/// points go to the earlier row.
RegimePlan classify_regime(std::uint64_t n, double p);

Regime2Params regime2_params(std::uint64_t n, double p);

/// The relaxed choice used outside the proved regions: l = 2 when delta >= 1/4,
/// else the smallest l in 2..6 with 1/(2l) <= delta <= 1/(1+l), else 2.
int fallback_ell(double delta);

}  // namespace wlnash
