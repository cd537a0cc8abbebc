#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "wlnash/equilibrium.hpp"
#include "wlnash/lemke_howson.hpp"

using namespace wlnash;
using wlnash::testing::four_cycle_game;
using wlnash::testing::game_from_code;
using wlnash::testing::random_game;

TEST(LemkeHowson, CoordinationEveryLabel) {
  const auto g = WinLoseGame::from_rows({{1, 0}, {0, 1}}, {{1, 0}, {0, 1}});
  const auto all = brute_force_ne(g, 2);
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto r = solve_lh(g, k);
    EXPECT_TRUE(verify_ne(g, r.profile).is_ne);
    EXPECT_NE(std::find(all.begin(), all.end(), r.profile), all.end());
  }
}

TEST(LemkeHowson, AllOnes) {
  const auto g = generate_game({2, 1.0, 0});
  const auto r = solve_lh(g);
  EXPECT_TRUE(verify_ne(g, r.profile).is_ne);
  EXPECT_EQ(r.profile.support_p().size(), 1u);
  EXPECT_EQ(r.profile.support_q().size(), 1u);
}

TEST(LemkeHowson, FourCycleUnique) {
  Rational half(1, 2);
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto r = solve_lh(four_cycle_game(), k);
    EXPECT_EQ(r.profile.p, (std::vector<Rational>{half, half}));
    EXPECT_EQ(r.profile.q, (std::vector<Rational>{half, half}));
  }
}

TEST(LemkeHowson, OneByOne) {
  const auto r = solve_lh(WinLoseGame::from_rows({{1}}, {{1}}));
  EXPECT_LE(pivot_count(r), 2u);
  EXPECT_EQ(r.profile, MixedProfile::pure(1, 0, 0));
}

TEST(LemkeHowson, RejectsLabels) {
  const auto g = four_cycle_game();
  EXPECT_THROW(solve_lh(g, 0), std::invalid_argument);
  EXPECT_THROW(solve_lh(g, 5), std::invalid_argument);
  EXPECT_THROW(solve_lh(g, 1, LhOptions{0, false}), std::invalid_argument);
}

TEST(LemkeHowson, ExhaustiveSmallGames) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n * n)); code += (n == 3 ? 7 : 1)) {
      const auto g = game_from_code(n, code);
      for (std::size_t k = 1; k <= 2 * n; ++k) {
        const auto r = solve_lh(g, k, LhOptions{1, true});
        ASSERT_TRUE(verify_ne(g, r.profile).is_ne) << "n=" << n << " code=" << code << " k=" << k;
      }
    }
}

TEST(LemkeHowson, RandomGamesVerify) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + rng() % 64;
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto g = random_game(rng, n, p);
    const std::size_t label = 1 + rng() % (2 * n);
    const auto r = solve_lh(g, label, LhOptions{1, true});
    ASSERT_TRUE(verify_ne(g, r.profile).is_ne) << "n=" << n << " p=" << p;
    ASSERT_EQ(r.path.size(), r.pivots);
    ASSERT_EQ(r.path.front(), label);

    // Cramer-type size check on the denominators.
    const double cap = n * (std::log2(static_cast<double>(n)) + 1) + 64;
    for (const auto& x : r.profile.p) ASSERT_LE(mpz_sizeinbase(x.get_den().get_mpz_t(), 2), cap);
    for (const auto& x : r.profile.q) ASSERT_LE(mpz_sizeinbase(x.get_den().get_mpz_t(), 2), cap);
  }
}

TEST(LemkeHowson, Deterministic) {
  const auto g = generate_game({30, 0.2, 5});
  const auto a = solve_lh(g, 7);
  const auto b = solve_lh(g, 7);
  EXPECT_EQ(a.pivots, b.pivots);
  EXPECT_EQ(a.path, b.path);
  EXPECT_EQ(a.profile, b.profile);
}

TEST(LemkeHowson, ShiftInvariance) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 16;
    const auto g = random_game(rng, n, std::uniform_real_distribution<double>(0.05, 0.8)(rng));
    const std::size_t label = 1 + rng() % (2 * n);
    const auto base = solve_lh(g, label);
    for (int shift : {2, 3, 5}) {
      const auto other = solve_lh(g, label, LhOptions{shift, false});
      ASSERT_EQ(other.path, base.path) << "n=" << n << " shift=" << shift;
      ASSERT_EQ(other.profile, base.profile);
    }
  }
}
