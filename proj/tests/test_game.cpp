#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "support.hpp"
#include "wlnash/game.hpp"
#include "wlnash/rng.hpp"

using namespace wlnash;
using wlnash::testing::four_cycle_game;
using wlnash::testing::game_from_code;
using wlnash::testing::naive_pure_ne;
using wlnash::testing::random_game;

TEST(Generate, ExtremeProbabilities) {
  const auto zero = generate_game({2, 0.0, 7});
  const auto one = generate_game({2, 1.0, 7});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_FALSE(zero.a(i, j));
      EXPECT_FALSE(zero.b(i, j));
      EXPECT_TRUE(one.a(i, j));
      EXPECT_TRUE(one.b(i, j));
    }
}

TEST(Generate, EmpiricalMean) {
  const auto g = generate_game({64, 0.1, 1});
  const double mean = static_cast<double>(g.a_bits().count() + g.b_bits().count()) / 8192.0;
  EXPECT_NEAR(mean, 0.1, 3 * std::sqrt(0.1 * 0.9 / 8192));
}

TEST(Generate, Reproducible) {
  EXPECT_EQ(generate_game({40, 0.3, 99}), generate_game({40, 0.3, 99}));
  EXPECT_FALSE(generate_game({40, 0.3, 99}) == generate_game({40, 0.3, 100}));
}

TEST(Generate, RejectsBadInput) {
  EXPECT_THROW(generate_game({0, 0.5, 1}), std::invalid_argument);
  EXPECT_THROW(generate_game({3, -0.1, 1}), std::invalid_argument);
  EXPECT_THROW(generate_game({3, 1.5, 1}), std::invalid_argument);
  EXPECT_THROW(generate_game({3, std::nan(""), 1}), std::invalid_argument);
}

TEST(Rng, CounterStreamIsOrderFree) {
  CounterRng r(5);
  const auto x = r.bits(17);
  r.bits(3);
  EXPECT_EQ(r.bits(17), x);
  EXPECT_NE(CounterRng(6).bits(17), x);
}

TEST(Digraph, SingleCell) {
  const auto d = to_digraph(WinLoseGame::from_rows({{1}}, {{0}}));
  EXPECT_TRUE(d.out_r.row_empty(0));
  EXPECT_TRUE(d.arc_cr(0, 0));
  EXPECT_EQ(d.arc_count(), 1u);
}

TEST(Digraph, FourCycle) {
  const auto d = to_digraph(four_cycle_game());
  EXPECT_TRUE(d.arc_rc(0, 0));
  EXPECT_TRUE(d.arc_rc(1, 1));
  EXPECT_TRUE(d.arc_cr(0, 1));
  EXPECT_TRUE(d.arc_cr(1, 0));
  EXPECT_EQ(d.arc_count(), 4u);
}

TEST(Digraph, RoundTripExhaustiveSmall) {
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n * n)); ++code) {
      const auto g = game_from_code(n, code);
      ASSERT_EQ(from_digraph(to_digraph(g)), g);
    }
}

TEST(Digraph, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 256;
    const auto g = random_game(rng, n, 0.3);
    const auto d = to_digraph(g);
    ASSERT_EQ(from_digraph(d), g);
    for (std::size_t i = 0; i < n; ++i)
      ASSERT_EQ(d.out_r.row_count(i), g.b_bits().row_count(i));
  }
}

TEST(PureSearch, ElevenEntry) {
  const auto g = WinLoseGame::from_rows({{0, 0, 0}, {0, 0, 0}, {0, 1, 0}},
                                        {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}});
  const auto r = pne_search(g);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (PurePair{2, 1}));
}

TEST(PureSearch, ZeroRowOfB) {
  const auto r = pne_search(WinLoseGame::from_rows({{1}}, {{0}}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (PurePair{0, 0}));
}

TEST(PureSearch, FourCycleHasNone) { EXPECT_FALSE(pne_search(four_cycle_game())); }

TEST(PureSearch, ExhaustiveUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n * n)); ++code) {
      const auto g = game_from_code(n, code);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) any = any || naive_pure_ne(g, i, j);
      const auto r = pne_search(g);
      ASSERT_EQ(r.has_value(), any) << "n=" << n << " code=" << code;
      if (r) ASSERT_TRUE(naive_pure_ne(g, r->row, r->col));
    }
}

TEST(PureSearch, RandomUpToSix) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20000; ++t) {
    const std::size_t n = 4 + rng() % 3;
    const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    const auto g = random_game(rng, n, p);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) any = any || naive_pure_ne(g, i, j);
    const auto r = pne_search(g);
    ASSERT_EQ(r.has_value(), any);
    if (r) {
      ASSERT_TRUE(naive_pure_ne(g, r->row, r->col));
      ASSERT_TRUE(is_pure_ne(g, *r));
    }
  }
}

TEST(MutualArc, Examples) {
  const auto one = mutual_arc_exists(to_digraph(WinLoseGame::from_rows({{1}}, {{1}})));
  ASSERT_TRUE(one);
  EXPECT_EQ(*one, (PurePair{0, 0}));
  EXPECT_FALSE(mutual_arc_exists(to_digraph(four_cycle_game())));
  EXPECT_TRUE(mutual_arc_exists(to_digraph(generate_game({5, 1.0, 0}))));
}

TEST(MutualArc, ImpliesPureEquilibrium) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 2000; ++t) {
    const auto g = random_game(rng, 1 + rng() % 12, 0.2);
    if (mutual_arc_exists(to_digraph(g))) ASSERT_TRUE(pne_search(g));
  }
}

TEST(Sprinkle, Extremes) {
  const auto d0 = to_digraph(generate_game({20, 0.3, 4}));
  EXPECT_EQ(sprinkle(d0, 0.0, 9), d0);
  const auto full = sprinkle(to_digraph(generate_game({20, 0.0, 4})), 1.0, 9);
  EXPECT_EQ(full.arc_count(), 800u);
}

TEST(Sprinkle, PreservesArcs) {
  const auto d0 = to_digraph(generate_game({50, 0.2, 4}));
  const auto d = sprinkle(d0, 0.3, 5);
  for (std::size_t i = 0; i < 50; ++i)
    for (std::size_t j = 0; j < 50; ++j) {
      if (d0.arc_rc(i, j)) ASSERT_TRUE(d.arc_rc(i, j));
      if (d0.arc_cr(j, i)) ASSERT_TRUE(d.arc_cr(j, i));
    }
}

TEST(Sprinkle, MarginalMatchesTarget) {
  // 2 * 250^2 = 125000 arc samples.
  const std::size_t n = 250;
  const auto sp = SprinkleParams::for_target(n, 0.1, 0.2);
  EXPECT_NEAR(sp.p1, 0.1 / 0.9, 1e-15);
  const auto d = sprinkle(to_digraph(generate_game({n, sp.p0, 21})), sp.p1, 22);
  const double samples = 2.0 * n * n;
  const double freq = static_cast<double>(d.arc_count()) / samples;
  EXPECT_NEAR(freq, 0.2, 3 * std::sqrt(0.2 * 0.8 / samples));
}

TEST(Sprinkle, SlackIsInverseEighthRoot) {
  EXPECT_DOUBLE_EQ(SprinkleParams::for_target(256, 0.1, 0.2).delta0, 0.5);
  EXPECT_THROW(SprinkleParams::for_target(10, 0.3, 0.2), std::invalid_argument);
}

namespace {

GameDigraph isolated_four_cycle(std::size_t n) {
  GameDigraph d{n, BitMatrix(n, n), BitMatrix(n, n)};
  d.out_r.set(0, 0);
  d.out_c.set(0, 1);
  d.out_r.set(1, 1);
  d.out_c.set(1, 0);
  return d;
}

}  // namespace

TEST(Admissible, Examples) {
  // (1 + 0.5) * 128 * 0.0625 = 12 exactly.
  auto d = isolated_four_cycle(128);
  const CycleCandidate c{{0, 1}, {0, 1}};
  EXPECT_TRUE(is_delta_admissible(d, c, 0.5, 0.0625));
  for (std::size_t j = 2; j < 12; ++j) d.out_r.set(0, j);
  ASSERT_EQ(d.out_r.row_count(0), 11u);
  EXPECT_TRUE(is_delta_admissible(d, c, 0.5, 0.0625));
  d.out_r.set(0, 12);
  EXPECT_FALSE(is_delta_admissible(d, c, 0.5, 0.0625));  // 12 is not < 12
  for (std::size_t i = 2; i < 14; ++i) d.out_c.set(1, i);
  d.out_r.reset(0, 12);
  EXPECT_FALSE(is_delta_admissible(d, c, 0.5, 0.0625));
  EXPECT_THROW(is_delta_admissible(d, CycleCandidate{{0, 128}, {0, 1}}, 0.5, 0.0625),
               std::invalid_argument);
}

TEST(CommonNeighbours, Examples) {
  GameDigraph d{4, BitMatrix(4, 4), BitMatrix(4, 4)};
  d.out_r.set(0, 0);
  d.out_r.set(0, 1);
  d.out_r.set(1, 1);
  d.out_r.set(1, 2);
  EXPECT_EQ(common_out_neighbours(d, Side::R, 0, 1), 1u);
  EXPECT_EQ(common_out_neighbours(d, Side::R, 2, 3), 0u);
  EXPECT_EQ(common_out_neighbours(d, Side::C, 0, 1), 0u);
  EXPECT_THROW(common_out_neighbours(d, Side::R, 1, 1), std::invalid_argument);
}

TEST(Wlg, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_game(rng, 1 + rng() % 70, 0.4);
    std::stringstream s;
    write_wlg(s, g);
    EXPECT_EQ(read_wlg(s), g);
  }
}

TEST(Wlg, Format) {
  std::stringstream s;
  write_wlg(s, four_cycle_game());
  EXPECT_EQ(s.str(), "2\n01\n10\n\n10\n01\n");
}

TEST(Wlg, RejectsMalformed) {
  for (const char* text : {"", "x\n", "0\n", "2\n01\n1\n\n10\n01\n", "2\n01\n10\n10\n01\n",
                           "2\n02\n10\n\n10\n01\n", "2\n01\n10\n\n10\n", "2\n01 \n10\n\n10\n01\n",
                           "2\n01\n10\n\n10\n01\n\n11\n"}) {
    std::stringstream s(text);
    EXPECT_THROW(read_wlg(s), std::invalid_argument) << '"' << text << '"';
  }
}
