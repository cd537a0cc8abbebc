#include "wlnash/game.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "wlnash/rng.hpp"

namespace wlnash {

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for_each_bit(row(r), [&](std::size_t c) {
      t.set(c, r);
      return true;
    });
  return t;
}

WinLoseGame::WinLoseGame(BitMatrix a, BitMatrix b)
    : n_(a.rows()), a_(std::move(a)), b_(std::move(b)) {
  if (n_ == 0) throw std::invalid_argument("game must have n >= 1");
  if (a_.cols() != n_ || b_.rows() != n_ || b_.cols() != n_)
    throw std::invalid_argument("payoff matrices must both be n x n");
}

WinLoseGame WinLoseGame::from_rows(const std::vector<std::vector<int>>& a,
                                   const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) throw std::invalid_argument("payoff matrices must both be n x n");
  BitMatrix am(n, n), bm(n, n);
  auto fill = [n](const std::vector<std::vector<int>>& src, BitMatrix& dst) {
    for (std::size_t i = 0; i < n; ++i) {
      if (src[i].size() != n) throw std::invalid_argument("ragged payoff row");
      for (std::size_t j = 0; j < n; ++j) {
        const int v = src[i][j];
        if (v != 0 && v != 1) throw std::invalid_argument("win-lose payoffs must be 0 or 1");
        dst.set(i, j, v == 1);
      }
    }
  };
  fill(a, am);
  fill(b, bm);
  return WinLoseGame(std::move(am), std::move(bm));
}

SprinkleParams SprinkleParams::for_target(std::size_t n, double p0, double p) {
  if (!(p0 >= 0.0 && p0 < 1.0) || !(p >= p0 && p <= 1.0))
    throw std::invalid_argument("sprinkling needs 0 <= p0 < 1 and p0 <= p <= 1");
  SprinkleParams s;
  s.p0 = p0;
  s.p1 = (p - p0) / (1.0 - p0);
  s.delta0 = std::pow(static_cast<double>(n), -0.125);
  return s;
}

WinLoseGame generate_game(const GenParams& params) {
  if (params.n == 0) throw std::invalid_argument("n must be positive");
  if (!(params.p >= 0.0 && params.p <= 1.0))
    throw std::invalid_argument("p must lie in [0, 1]");
  const std::size_t n = params.n;
  const CounterRng rng(params.seed);
  BitMatrix a(n, n), b(n, n);
  const std::uint64_t nn = static_cast<std::uint64_t>(n) * n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t k = static_cast<std::uint64_t>(i) * n + j;
      if (rng.bernoulli(k, params.p)) a.set(i, j);
      if (rng.bernoulli(nn + k, params.p)) b.set(i, j);
    }
  }
  return WinLoseGame(std::move(a), std::move(b));
}

double game_density(const WinLoseGame& game) {
  const double cells = 2.0 * static_cast<double>(game.n()) * static_cast<double>(game.n());
  return static_cast<double>(game.a_bits().count() + game.b_bits().count()) / cells;
}

GameDigraph to_digraph(const WinLoseGame& game) {
  return GameDigraph{game.n(), game.b_bits(), game.a_bits().transposed()};
}

WinLoseGame from_digraph(const GameDigraph& d) {
  return WinLoseGame(d.out_c.transposed(), d.out_r);
}

bool is_pure_ne(const WinLoseGame& game, PurePair pair) {
  const std::size_t n = game.n();
  for (std::size_t k = 0; k < n; ++k) {
    if (game.a(k, pair.col) && !game.a(pair.row, pair.col)) return false;
    if (game.b(pair.row, k) && !game.b(pair.row, pair.col)) return false;
  }
  return true;
}

std::optional<PurePair> pne_search(const WinLoseGame& game) {
  const std::size_t n = game.n();
  const BitMatrix& a = game.a_bits();
  const BitMatrix& b = game.b_bits();

  // (a, b) = (1, 1) is always an equilibrium.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = first_common(a.row(i), b.row(i));
    if (j != kNoBit) return PurePair{i, j};
  }

  // Columns of A that contain a 1, as a single bitset.
  std::vector<Word> col_nonzero(a.stride(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = a.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) col_nonzero[k] |= r[k];
  }
  std::vector<Word> zero_cols(a.stride());
  for (std::size_t k = 0; k < zero_cols.size(); ++k) zero_cols[k] = ~col_nonzero[k];
  zero_cols.back() &= a.tail_mask();

  std::optional<std::size_t> zero_row;
  for (std::size_t i = 0; i < n; ++i) {
    if (!b.row_empty(i)) continue;
    if (!zero_row) zero_row = i;
    // (1, 0): row i of B is all zero.
    const std::size_t j = first_set(a.row(i));
    if (j != kNoBit) return PurePair{i, j};
  }

  // (0, 1): column j of A is all zero.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = first_common(b.row(i), zero_cols);
    if (j != kNoBit) return PurePair{i, j};
  }

  // (0, 0): zero row of B and zero column of A.
  const std::size_t zc = first_set(zero_cols);
  if (zero_row && zc != kNoBit) return PurePair{*zero_row, zc};
  return std::nullopt;
}

std::optional<PurePair> mutual_arc_exists(const GameDigraph& d) {
  // r_i -> c_j -> r_i iff b(i,j) = a(i,j) = 1; compare out_r row i against
  // column i of out_c, i.e. row i of A.
  for (std::size_t i = 0; i < d.n; ++i) {
    std::optional<PurePair> hit;
    for_each_bit(d.out_r.row(i), [&](std::size_t j) {
      if (d.out_c.test(j, i)) {
        hit = PurePair{i, j};
        return false;
      }
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

GameDigraph sprinkle(const GameDigraph& d0, double p1, std::uint64_t seed) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw std::invalid_argument("p1 must lie in [0, 1]");
  const std::size_t n = d0.n;
  const CounterRng rng(CounterRng::derive(seed, 0x7370726e6b6cULL));
  GameDigraph out = d0;
  const std::uint64_t nn = static_cast<std::uint64_t>(n) * n;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t k = static_cast<std::uint64_t>(u) * n + v;
      if (rng.bernoulli(k, p1)) out.out_r.set(u, v);
      if (rng.bernoulli(nn + k, p1)) out.out_c.set(u, v);
    }
  }
  return out;
}

namespace {

void check_cycle_indices(const GameDigraph& d, const CycleCandidate& cycle) {
  if (cycle.rows.empty() || cycle.rows.size() != cycle.cols.size())
    throw std::invalid_argument("cycle needs equally many rows and columns");
  for (std::size_t r : cycle.rows)
    if (r >= d.n) throw std::invalid_argument("cycle row index out of range");
  for (std::size_t c : cycle.cols)
    if (c >= d.n) throw std::invalid_argument("cycle column index out of range");
}

}  // namespace

bool is_delta_admissible(const GameDigraph& d0, const CycleCandidate& cycle, double delta,
                         double p0) {
  check_cycle_indices(d0, cycle);
  const double bound = (1.0 + delta) * static_cast<double>(d0.n) * p0;
  for (std::size_t r : cycle.rows)
    if (!(static_cast<double>(d0.out_r.row_count(r)) < bound)) return false;
  for (std::size_t c : cycle.cols)
    if (!(static_cast<double>(d0.out_c.row_count(c)) < bound)) return false;
  return true;
}

std::size_t common_out_neighbours(const GameDigraph& d, Side side, std::size_t u,
                                  std::size_t v) {
  if (u == v) throw std::invalid_argument("common_out_neighbours needs two distinct vertices");
  if (u >= d.n || v >= d.n) throw std::invalid_argument("vertex index out of range");
  const BitMatrix& m = side == Side::R ? d.out_r : d.out_c;
  return and_count(m.row(u), m.row(v));
}

// ---------------------------------------------------------------------------
// .wlg text format

namespace {

BitMatrix parse_rows(std::istream& in, std::size_t n, const char* which) {
  BitMatrix m(n, n);
  std::string line;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw std::invalid_argument(std::string("wlg: missing row of ") + which);
    if (line.size() != n)
      throw std::invalid_argument(std::string("wlg: ragged row in ") + which);
    for (std::size_t j = 0; j < n; ++j) {
      if (line[j] == '1')
        m.set(i, j);
      else if (line[j] != '0')
        throw std::invalid_argument(std::string("wlg: non-binary entry in ") + which);
    }
  }
  return m;
}

}  // namespace

WinLoseGame read_wlg(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.empty())
    throw std::invalid_argument("wlg: missing size line");
  for (char ch : line)
    if (ch < '0' || ch > '9') throw std::invalid_argument("wlg: size line must be decimal");
  const std::size_t n = std::stoull(line);
  if (n == 0) throw std::invalid_argument("wlg: n must be positive");
  BitMatrix a = parse_rows(in, n, "A");
  if (!std::getline(in, line) || !line.empty())
    throw std::invalid_argument("wlg: expected a blank line between A and B");
  BitMatrix b = parse_rows(in, n, "B");
  while (std::getline(in, line))
    if (!line.empty()) throw std::invalid_argument("wlg: trailing content after B");
  return WinLoseGame(std::move(a), std::move(b));
}

WinLoseGame read_wlg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_wlg(in);
}

void write_wlg(std::ostream& out, const WinLoseGame& game) {
  const std::size_t n = game.n();
  out << n << '\n';
  std::string row(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = game.a(i, j) ? '1' : '0';
    out << row << '\n';
  }
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = game.b(i, j) ? '1' : '0';
    out << row << '\n';
  }
}

void write_wlg_file(const std::string& path, const WinLoseGame& game) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_wlg(out, game);
}

}  // namespace wlnash
