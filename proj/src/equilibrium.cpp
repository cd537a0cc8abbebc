#include "wlnash/equilibrium.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wlnash {

VerificationReport verify_ne(const WinLoseGame& game, const MixedProfile& profile) {
  const std::size_t n = game.n();
  if (profile.p.size() != n || profile.q.size() != n)
    throw std::invalid_argument("profile length does not match the game");
  if (!profile.is_distribution())
    throw std::invalid_argument("profile vectors must be nonnegative and sum to 1");

  const auto supp_p = profile.support_p();
  const auto supp_q = profile.support_q();

  // Pure-strategy payoffs: row i against q, column j against p.
  std::vector<Rational> row_vals(n, 0), col_vals(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : supp_q)
      if (game.a(i, j)) row_vals[i] += profile.q[j];
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i : supp_p)
      if (game.b(i, j)) col_vals[j] += profile.p[i];

  VerificationReport rep;
  rep.row_payoff = 0;
  rep.col_payoff = 0;
  for (std::size_t i : supp_p) rep.row_payoff += profile.p[i] * row_vals[i];
  for (std::size_t j : supp_q) rep.col_payoff += profile.q[j] * col_vals[j];

  for (std::size_t i = 0; i < n; ++i) {
    Rational gain = row_vals[i] - rep.row_payoff;
    if (sgn(gain) > 0 && (!rep.best_deviation || gain > rep.best_deviation->gain))
      rep.best_deviation = Deviation{Player::Row, i, gain};
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational gain = col_vals[j] - rep.col_payoff;
    if (sgn(gain) > 0 && (!rep.best_deviation || gain > rep.best_deviation->gain))
      rep.best_deviation = Deviation{Player::Column, j, gain};
  }
  rep.is_ne = !rep.best_deviation.has_value();
  return rep;
}

namespace {

using IntMatrix = std::vector<std::vector<int>>;

// Solves the square system m x = rhs exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
  const std::size_t size = m.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == size) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < size; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t r = 0; r < size; ++r) rhs[r] /= m[r][r];
  return rhs;
}

// A normalized vertex of one player's best-response region: the mixed
// strategy x over `k` own strategies, the value u it leaves the opponent,
// and the opponent's best responses.
struct Candidate {
  std::vector<Rational> x;
  std::vector<std::size_t> support;
  std::vector<bool> best_responses;
};

template <typename Fn>
void for_each_subset(std::size_t universe, std::size_t size, Fn&& fn) {
  if (size > universe) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t k = 0; k < size; ++k) idx[k] = k;
  while (true) {
    fn(idx);
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == universe - size + k - 1) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t t = k; t < size; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// payoff[s][t]: what the opponent earns with response t when this player
// plays s.
std::vector<Candidate> vertex_candidates(const IntMatrix& payoff, std::size_t own,
                                         std::size_t other, std::size_t max_support) {
  std::vector<Candidate> out;
  const std::size_t top = std::min({own, other, max_support});
  for (std::size_t s = 1; s <= top; ++s) {
    for_each_subset(own, s, [&](const std::vector<std::size_t>& support) {
      for_each_subset(other, s, [&](const std::vector<std::size_t>& tight) {
        // Unknowns x_support (s of them) and u; rows: one per tight response
        // plus the normalization.
        std::vector<std::vector<Rational>> m(s + 1, std::vector<Rational>(s + 1, 0));
        std::vector<Rational> rhs(s + 1, 0);
        for (std::size_t r = 0; r < s; ++r) {
          for (std::size_t c = 0; c < s; ++c) m[r][c] = payoff[support[c]][tight[r]];
          m[r][s] = -1;
        }
        for (std::size_t c = 0; c < s; ++c) m[s][c] = 1;
        rhs[s] = 1;
        auto sol = solve_square(std::move(m), std::move(rhs));
        if (!sol) return;
        for (std::size_t c = 0; c < s; ++c)
          if (sgn((*sol)[c]) < 0) return;
        const Rational& u = (*sol)[s];

        Candidate cand;
        cand.x.assign(own, 0);
        for (std::size_t c = 0; c < s; ++c) cand.x[support[c]] = (*sol)[c];
        cand.best_responses.assign(other, false);
        for (std::size_t t = 0; t < other; ++t) {
          Rational val = 0;
          for (std::size_t c = 0; c < s; ++c)
            if (payoff[support[c]][t] != 0) val += (*sol)[c] * payoff[support[c]][t];
          if (val > u) return;
          cand.best_responses[t] = (val == u);
        }
        for (std::size_t c = 0; c < s; ++c)
          if (sgn((*sol)[c]) != 0) cand.support.push_back(support[c]);
        out.push_back(std::move(cand));
      });
    });
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& l, const Candidate& r) {
    if (l.support.size() != r.support.size()) return l.support.size() < r.support.size();
    return l.support < r.support;
  });
  std::vector<Candidate> unique;
  for (auto& c : out) {
    bool dup = false;
    for (const auto& u : unique)
      if (u.x == c.x) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(std::move(c));
  }
  return unique;
}

struct EquilibriumPair {
  const Candidate* p;
  const Candidate* q;
};

// All candidate pairs that are mutual best responses, ordered by total
// support size then lexicographically by (support p, support q).
std::vector<EquilibriumPair> matching_pairs(const std::vector<Candidate>& rows,
                                            const std::vector<Candidate>& cols,
                                            bool first_only) {
  std::vector<EquilibriumPair> out;
  std::size_t max_total = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) max_total = std::max(max_total, r.support.size() + c.support.size());
  for (std::size_t total = 2; total <= max_total; ++total) {
    for (const auto& r : rows) {
      if (r.support.size() >= total) continue;
      for (const auto& c : cols) {
        if (r.support.size() + c.support.size() != total) continue;
        // Row support must be best responses to q, column support to p.
        bool ok = true;
        for (std::size_t i : r.support)
          if (!c.best_responses[i]) { ok = false; break; }
        if (ok)
          for (std::size_t j : c.support)
            if (!r.best_responses[j]) { ok = false; break; }
        if (!ok) continue;
        out.push_back({&r, &c});
        if (first_only) return out;
      }
    }
  }
  return out;
}

void build_payoffs(const WinLoseGame& game, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols, IntMatrix& for_rows,
                   IntMatrix& for_cols) {
  // for_rows[i][j] = b(rows[i], cols[j]); for_cols[j][i] = a(rows[i], cols[j]).
  for_rows.assign(rows.size(), std::vector<int>(cols.size(), 0));
  for_cols.assign(cols.size(), std::vector<int>(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for_rows[i][j] = game.b(rows[i], cols[j]) ? 1 : 0;
      for_cols[j][i] = game.a(rows[i], cols[j]) ? 1 : 0;
    }
}

void check_selection(const WinLoseGame& game, const SubgameSelection& sel) {
  if (sel.rows.empty() || sel.cols.empty()) throw std::invalid_argument("empty subgame selection");
  auto check = [&](const std::vector<std::size_t>& v) {
    std::vector<bool> seen(game.n(), false);
    for (std::size_t x : v) {
      if (x >= game.n() || seen[x]) throw std::invalid_argument("bad subgame index");
      seen[x] = true;
    }
  };
  check(sel.rows);
  check(sel.cols);
}

}  // namespace

MixedProfile subgame_ne(const WinLoseGame& game, const SubgameSelection& sel,
                        std::size_t limit) {
  check_selection(game, sel);
  if (sel.rows.size() > limit || sel.cols.size() > limit)
    throw std::invalid_argument("subgame exceeds the support enumeration limit");
  IntMatrix for_rows, for_cols;
  build_payoffs(game, sel.rows, sel.cols, for_rows, for_cols);
  const auto row_cands = vertex_candidates(for_rows, sel.rows.size(), sel.cols.size(),
                                           sel.rows.size());
  const auto col_cands = vertex_candidates(for_cols, sel.cols.size(), sel.rows.size(),
                                           sel.cols.size());
  const auto pairs = matching_pairs(row_cands, col_cands, true);
  if (pairs.empty()) throw std::logic_error("support enumeration found no subgame equilibrium");
  return MixedProfile{pairs.front().p->x, pairs.front().q->x};
}

MixedProfile mne_from_stable_cycle(const WinLoseGame& game, const CycleCandidate& cycle) {
  const MixedProfile sub = subgame_ne(game, SubgameSelection{cycle.rows, cycle.cols});
  MixedProfile full;
  full.p.assign(game.n(), 0);
  full.q.assign(game.n(), 0);
  for (std::size_t k = 0; k < cycle.rows.size(); ++k) full.p[cycle.rows[k]] = sub.p[k];
  for (std::size_t k = 0; k < cycle.cols.size(); ++k) full.q[cycle.cols[k]] = sub.q[k];
  const auto rep = verify_ne(game, full);
  if (!rep.is_ne) {
    std::ostringstream msg;
    msg << "lifted cycle equilibrium fails verification; deviation by "
        << (rep.best_deviation->player == Player::Row ? "row " : "column ")
        << rep.best_deviation->strategy << " gains " << rep.best_deviation->gain;
    throw std::logic_error(msg.str());
  }
  return full;
}

std::vector<MixedProfile> brute_force_ne(const WinLoseGame& game, std::size_t max_support) {
  const std::size_t n = game.n();
  if (n > 12) throw std::invalid_argument("brute force oracle is limited to n <= 12");
  if (max_support == 0 || max_support > n)
    throw std::invalid_argument("max_support must lie in [1, n]");
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = k;
  IntMatrix for_rows, for_cols;
  build_payoffs(game, all, all, for_rows, for_cols);
  const auto row_cands = vertex_candidates(for_rows, n, n, max_support);
  const auto col_cands = vertex_candidates(for_cols, n, n, max_support);

  std::vector<MixedProfile> out;
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, bool> seen;
  for (const auto& pr : matching_pairs(row_cands, col_cands, false)) {
    auto key = std::make_pair(pr.p->support, pr.q->support);
    if (seen.emplace(key, true).second) out.push_back(MixedProfile{pr.p->x, pr.q->x});
  }
  return out;
}

}  // namespace wlnash
