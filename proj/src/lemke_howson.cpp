#include "wlnash/lemke_howson.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace wlnash {

namespace {

// Integer (fraction-free) tableau for one best-response polytope in the
// form  M z = 1, z >= 0, with one variable per label 0..2n-1. Every entry is
// the true coefficient times the current determinant `det_`.
class Tableau {
 public:
  Tableau(std::size_t n, std::vector<std::size_t> initial_basis)
      : n_(n), width_(2 * n + 1), cells_(n * width_), basis_(std::move(initial_basis)),
        row_of_(2 * n, kNone), lex_cols_(basis_) {
    for (std::size_t r = 0; r < n_; ++r) {
      row_of_[basis_[r]] = r;
      at(r, basis_[r]) = 1;
      at(r, rhs()) = 1;
    }
    for (std::size_t l = 0; l < 2 * n_; ++l)
      if (row_of_[l] == kNone) nonbasic_.push_back(l);
  }

  mpz_class& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }
  std::size_t rhs() const { return 2 * n_; }

  bool is_basic(std::size_t label) const { return row_of_[label] != kNone; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const std::vector<std::size_t>& nonbasic() const { return nonbasic_; }

  /// Value of variable `label` scaled by the determinant (0 if nonbasic).
  mpz_class scaled_value(std::size_t label) const {
    return is_basic(label) ? at(row_of_[label], rhs()) : mpz_class(0);
  }

  /// Brings `entering` into the basis; returns the label that leaves.
  std::size_t pivot(std::size_t entering) {
    const std::size_t r = ratio_test(entering);
    const std::size_t leaving = basis_[r];
    const mpz_class piv = at(r, entering);

    std::vector<std::size_t> update_cols;
    update_cols.reserve(n_ + 2);
    for (std::size_t l : nonbasic_)
      if (l != entering) update_cols.push_back(l);
    update_cols.push_back(leaving);
    update_cols.push_back(rhs());

    mpz_class tmp;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == r) continue;
      const mpz_class f = at(i, entering);
      for (std::size_t c : update_cols) {
        mpz_class& cell = at(i, c);
        mpz_mul(tmp.get_mpz_t(), cell.get_mpz_t(), piv.get_mpz_t());
        if (sgn(f) != 0) mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), at(r, c).get_mpz_t());
        mpz_divexact(cell.get_mpz_t(), tmp.get_mpz_t(), det_.get_mpz_t());
      }
      at(i, entering) = 0;
    }
    for (std::size_t l : basis_)
      if (l != leaving) at(row_of_[l], l) = piv;
    det_ = piv;

    basis_[r] = entering;
    row_of_[entering] = r;
    row_of_[leaving] = kNone;
    std::replace(nonbasic_.begin(), nonbasic_.end(), entering, leaving);
    return leaving;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Lexicographic minimum ratio over rows with a positive entering entry,
  // comparing (rhs, initial-basis columns) / entering entry.
  std::size_t ratio_test(std::size_t entering) const {
    std::size_t best = kNone;
    mpz_class lhs, rhs_v;
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(at(i, entering)) <= 0) continue;
      if (best == kNone) {
        best = i;
        continue;
      }
      const mpz_class& ei = at(i, entering);
      const mpz_class& eb = at(best, entering);
      auto compare = [&](std::size_t col) {
        lhs = at(i, col) * eb;
        rhs_v = at(best, col) * ei;
        return cmp(lhs, rhs_v);
      };
      int c = compare(rhs());
      for (std::size_t k = 0; c == 0 && k < lex_cols_.size(); ++k) c = compare(lex_cols_[k]);
      if (c == 0) throw std::logic_error("lexicographic ratio test tie");
      if (c < 0) best = i;
    }
    if (best == kNone) throw std::logic_error("unbounded edge in a bounded polytope");
    return best;
  }

  std::size_t n_;
  std::size_t width_;
  std::vector<mpz_class> cells_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> row_of_;
  std::vector<std::size_t> nonbasic_;
  std::vector<std::size_t> lex_cols_;
  mpz_class det_ = 1;
};

void check_labels(const Tableau& p, const Tableau& q, std::size_t n, std::size_t missing,
                  std::size_t next_entering, bool done) {
  std::vector<int> count(2 * n, 0);
  for (std::size_t l : p.nonbasic()) ++count[l];
  for (std::size_t l : q.nonbasic()) ++count[l];
  std::size_t duplicated = 0, absent = 0;
  for (std::size_t l = 0; l < 2 * n; ++l) {
    if (count[l] == 0) {
      ++absent;
      if (l != missing) throw std::logic_error("label " + std::to_string(l + 1) + " lost");
    } else if (count[l] == 2) {
      ++duplicated;
      if (l != next_entering)
        throw std::logic_error("duplicated label is not the next entering label");
    }
  }
  const bool ok = done ? (absent == 0 && duplicated == 0) : (absent == 1 && duplicated == 1);
  if (!ok) throw std::logic_error("complementary path invariant violated");
}

std::vector<Rational> normalized(const std::vector<mpz_class>& scaled) {
  mpz_class total = 0;
  for (const auto& v : scaled) total += v;
  if (sgn(total) <= 0) throw std::logic_error("Lemke-Howson ended at the artificial equilibrium");
  std::vector<Rational> out;
  out.reserve(scaled.size());
  for (const auto& v : scaled) {
    Rational q(v, total);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

LhResult solve_lh(const WinLoseGame& game, std::size_t dropped_label, const LhOptions& options) {
  const std::size_t n = game.n();
  if (dropped_label < 1 || dropped_label > 2 * n)
    throw std::invalid_argument("dropped label must lie in [1, 2n]");
  if (options.shift < 1) throw std::invalid_argument("payoff shift must be >= 1");

  // Labels 0..n-1 are rows, n..2n-1 columns. Row player's polytope:
  // x_i (label i) and slacks s_j (label n+j) with (B + shift)^T x + s = 1.
  std::vector<std::size_t> p_basis(n), q_basis(n);
  for (std::size_t k = 0; k < n; ++k) {
    p_basis[k] = n + k;
    q_basis[k] = k;
  }
  Tableau tp(n, p_basis);
  Tableau tq(n, q_basis);
  const long shift = options.shift;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) tp.at(j, i) = (game.b(i, j) ? 1 : 0) + shift;
  // Column player's polytope: slacks r_i (label i) and y_j (label n+j) with
  // (A + shift) y + r = 1.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tq.at(i, n + j) = (game.a(i, j) ? 1 : 0) + shift;

  const std::size_t missing = dropped_label - 1;
  std::size_t entering = missing;
  bool in_p = missing < n;

  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  LhResult result;
  while (true) {
    Tableau& t = in_p ? tp : tq;
    const std::size_t leaving = t.pivot(entering);
    ++result.pivots;
    result.path.push_back(entering + 1);
    const bool done = leaving == missing;
    check_labels(tp, tq, n, missing, leaving, done);
    if (options.audit_bases) {
      auto bp = tp.basis(), bq = tq.basis();
      std::sort(bp.begin(), bp.end());
      std::sort(bq.begin(), bq.end());
      if (!seen.emplace(std::move(bp), std::move(bq)).second)
        throw std::logic_error("Lemke-Howson revisited a basis");
    }
    if (done) break;
    entering = leaving;
    in_p = !in_p;
  }

  std::vector<mpz_class> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = tp.scaled_value(i);
  for (std::size_t j = 0; j < n; ++j) y[j] = tq.scaled_value(n + j);
  result.profile.p = normalized(x);
  result.profile.q = normalized(y);
  return result;
}

}  // namespace wlnash
