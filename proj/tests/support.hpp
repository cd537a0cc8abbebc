#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "wlnash/game.hpp"

namespace wlnash::testing {

// Test-side sampler, deliberately independent of the library generator.
inline WinLoseGame random_game(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  BitMatrix a(n, n), b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (coin(rng)) a.set(i, j);
      if (coin(rng)) b.set(i, j);
    }
  return WinLoseGame(a, b);
}

// Game number `code` in the enumeration used by the exhaustive tests: the low
// n^2 bits fill A row-major, the next n^2 bits fill B.
inline WinLoseGame game_from_code(std::size_t n, std::uint64_t code) {
  BitMatrix a(n, n), b(n, n);
  const std::size_t cells = n * n;
  for (std::size_t k = 0; k < cells; ++k) {
    if ((code >> k) & 1U) a.set(k / n, k % n);
    if ((code >> (cells + k)) & 1U) b.set(k / n, k % n);
  }
  return WinLoseGame(a, b);
}

// Naive pure best-response check straight from the definition.
inline bool naive_pure_ne(const WinLoseGame& g, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < g.n(); ++k) {
    if (g.a(k, j) > g.a(i, j)) return false;
    if (g.b(i, k) > g.b(i, j)) return false;
  }
  return true;
}

inline WinLoseGame four_cycle_game() {
  return WinLoseGame::from_rows({{0, 1}, {1, 0}}, {{1, 0}, {0, 1}});
}

}  // namespace wlnash::testing
