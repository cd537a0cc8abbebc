#include "wlnash/cycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace wlnash {

bool is_directed_cycle(const GameDigraph& d, const CycleCandidate& c) {
  const std::size_t ell = c.rows.size();
  if (ell == 0 || c.cols.size() != ell) return false;
  std::vector<bool> seen_r(d.n, false), seen_c(d.n, false);
  for (std::size_t k = 0; k < ell; ++k) {
    const std::size_t r = c.rows[k], col = c.cols[k];
    if (r >= d.n || col >= d.n || seen_r[r] || seen_c[col]) return false;
    seen_r[r] = seen_c[col] = true;
  }
  for (std::size_t k = 0; k < ell; ++k) {
    if (!d.arc_rc(c.rows[k], c.cols[k])) return false;
    if (!d.arc_cr(c.cols[k], c.rows[(k + 1) % ell])) return false;
  }
  return true;
}

namespace {

// Finds an outside vertex hit by two of `sources`' out-bitsets in `m`,
// ignoring positions listed in `inside`.
std::optional<InstabilityWitness> double_cover(const BitMatrix& m,
                                               const std::vector<std::size_t>& sources,
                                               const std::vector<std::size_t>& inside,
                                               Side outside_side) {
  const std::size_t stride = m.stride();
  std::vector<Word> once(stride, 0), twice(stride, 0);
  for (std::size_t s : sources) {
    auto row = m.row(s);
    for (std::size_t k = 0; k < stride; ++k) {
      twice[k] |= once[k] & row[k];
      once[k] |= row[k];
    }
  }
  for (std::size_t v : inside) twice[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  const std::size_t hit = first_set(twice);
  if (hit == kNoBit) return std::nullopt;

  InstabilityWitness w;
  w.outside_side = outside_side;
  w.outside = hit;
  bool have_first = false;
  for (std::size_t s : sources) {
    if (!m.test(s, hit)) continue;
    if (!have_first) {
      w.first = s;
      have_first = true;
    } else {
      w.second = s;
      break;
    }
  }
  return w;
}

}  // namespace

StabilityReport is_stable_cycle(const GameDigraph& d, const CycleCandidate& c) {
  if (!is_directed_cycle(d, c)) throw std::invalid_argument("not a directed cycle of the digraph");
  StabilityReport report;
  report.witness = double_cover(d.out_r, c.rows, c.cols, Side::C);
  if (!report.witness) report.witness = double_cover(d.out_c, c.cols, c.rows, Side::R);
  report.stable = !report.witness.has_value();
  return report;
}

std::size_t default_cycle_budget(std::size_t n, std::size_t ell) { return 50 * n * ell; }

namespace {

class CycleSearcher {
 public:
  CycleSearcher(const GameDigraph& d, std::size_t ell, std::size_t budget)
      : d_(d), ell_(ell), budget_(budget), used_r_(d.n, false), used_c_(d.n, false) {}

  CycleSearchResult run() {
    for (std::size_t root = 0; root < d_.n && !stop_; ++root) {
      root_ = root;
      path_.rows.assign(1, root);
      path_.cols.clear();
      used_r_[root] = true;
      extend_from_row(root);
      used_r_[root] = false;
    }
    if (!stop_) result_.status = SearchStatus::Exhausted;
    return result_;
  }

 private:
  bool visit() {
    if (++result_.visits > budget_) {
      result_.status = SearchStatus::BudgetHit;
      stop_ = true;
    }
    return !stop_;
  }

  void extend_from_row(std::size_t r) {
    for_each_bit(d_.out_r.row(r), [&](std::size_t c) {
      if (used_c_[c]) return true;
      if (!visit()) return false;
      used_c_[c] = true;
      path_.cols.push_back(c);
      if (path_.cols.size() == ell_) {
        if (d_.arc_cr(c, root_)) close_cycle();
      } else {
        extend_from_col(c);
      }
      path_.cols.pop_back();
      used_c_[c] = false;
      return !stop_;
    });
  }

  void extend_from_col(std::size_t c) {
    for_each_bit(d_.out_c.row(c), [&](std::size_t r) {
      if (r <= root_ || used_r_[r]) return true;
      if (!visit()) return false;
      used_r_[r] = true;
      path_.rows.push_back(r);
      extend_from_row(r);
      path_.rows.pop_back();
      used_r_[r] = false;
      return !stop_;
    });
  }

  void close_cycle() {
    ++result_.cycles_tested;
    if (is_stable_cycle(d_, path_).stable) {
      result_.cycle = path_;
      result_.status = SearchStatus::Found;
      stop_ = true;
    }
  }

  const GameDigraph& d_;
  std::size_t ell_;
  std::size_t budget_;
  std::size_t root_ = 0;
  std::vector<bool> used_r_, used_c_;
  CycleCandidate path_;
  CycleSearchResult result_;
  bool stop_ = false;
};

}  // namespace

CycleSearchResult find_stable_cycle(const GameDigraph& d, std::size_t ell, std::size_t budget) {
  if (ell < 1 || ell > d.n) throw std::invalid_argument("cycle half-length must lie in [1, n]");
  if (ell == 1) {
    CycleSearchResult res;
    if (auto pair = mutual_arc_exists(d)) {
      res.cycle = CycleCandidate{{pair->row}, {pair->col}};
      res.status = SearchStatus::Found;
      res.cycles_tested = 1;
    }
    return res;
  }
  if (budget == 0) budget = default_cycle_budget(d.n, ell);
  return CycleSearcher(d, ell, budget).run();
}

std::size_t bad_pair_count(const GameDigraph& d, std::size_t window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  std::size_t count = 0;
  for (std::size_t i = 0; i < d.n; ++i) {
    const std::size_t last = std::min(d.n - 1, i + window);
    for (std::size_t j = i + 1; j <= last; ++j)
      if (and_count(d.out_r.row(i), d.out_r.row(j)) >= 3) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Pairing procedure

namespace {

class PairingRun {
 public:
  PairingRun(const GameDigraph& d, const Regime2Params& params, const PairingOptions& options)
      : n_(d.n),
        d_(params.d_localize),
        m_(params.m_truncate),
        audit_on_(options.audit),
        rc_(d.out_r),
        cr_(d.out_c),
        rc_in_(d.out_r.transposed()),
        cr_in_(d.out_c.transposed()),
        rc_dead_(n_, n_),
        rc_dead_in_(n_, n_),
        cr_dead_(n_, n_),
        cr_dead_in_(n_, n_),
        r_alive_(words_for(n_), 0),
        c_alive_(words_for(n_), 0),
        removed_r_(n_, false),
        removed_c_(n_, false) {
    for (std::size_t v = 0; v < n_; ++v) {
      set_bit(r_alive_, v, true);
      set_bit(c_alive_, v, true);
    }
    frontier_size_ = n_;
  }

  PairingState run() {
    while (frontier_size_ >= 2 && !state_.pne) step();
    for (std::size_t r = 0; r < n_; ++r)
      if (test_bit(r_alive_, r)) state_.frontier.push_back(r);
    state_.c_available.resize(n_);
    for (std::size_t c = 0; c < n_; ++c) state_.c_available[c] = test_bit(c_alive_, c);
    return std::move(state_);
  }

 private:
  enum Dir : std::uint64_t { RtoC = 0, CtoR = 1 };

  static bool test_bit(const std::vector<Word>& b, std::size_t v) {
    return (b[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  static void set_bit(std::vector<Word>& b, std::size_t v, bool on) {
    const Word mask = Word{1} << (v % kWordBits);
    b[v / kWordBits] = on ? (b[v / kWordBits] | mask) : (b[v / kWordBits] & ~mask);
  }

  std::uint64_t key(Dir dir, std::size_t from, std::size_t to) const {
    return (static_cast<std::uint64_t>(dir) * n_ + from) * n_ + to;
  }

  void audit_exposure(Dir dir, std::size_t from, std::size_t to) {
    ++state_.audit.exposed;
    if (!audit_on_) return;
    const bool endpoint_gone = dir == RtoC ? (removed_r_[from] || removed_c_[to])
                                           : (removed_c_[from] || removed_r_[to]);
    if (endpoint_gone || deleted_log_.count(key(dir, from, to)) != 0) ++state_.audit.dead_reads;
  }

  // First m live arcs in `present` row `v`, masked by the live endpoint set.
  std::vector<std::size_t> expose(const BitMatrix& present, const BitMatrix& dead, std::size_t v,
                                  const std::vector<Word>& alive_targets) {
    std::vector<std::size_t> out;
    if (m_ == 0) return out;
    auto p = present.row(v);
    auto x = dead.row(v);
    for (std::size_t k = 0; k < p.size() && out.size() < m_; ++k) {
      Word w = p[k] & ~x[k] & alive_targets[k];
      while (w != 0 && out.size() < m_) {
        out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  std::vector<std::size_t> expose_out_r(std::size_t r) {
    auto v = expose(rc_, rc_dead_, r, c_alive_);
    for (std::size_t c : v) audit_exposure(RtoC, r, c);
    return v;
  }
  std::vector<std::size_t> expose_in_r(std::size_t r) {
    auto v = expose(cr_in_, cr_dead_in_, r, c_alive_);
    for (std::size_t c : v) audit_exposure(CtoR, c, r);
    return v;
  }
  std::vector<std::size_t> expose_out_c(std::size_t c) {
    auto v = expose(cr_, cr_dead_, c, r_alive_);
    for (std::size_t r : v) audit_exposure(CtoR, c, r);
    return v;
  }
  std::vector<std::size_t> expose_in_c(std::size_t c) {
    auto v = expose(rc_in_, rc_dead_in_, c, r_alive_);
    for (std::size_t r : v) audit_exposure(RtoC, r, c);
    return v;
  }

  void delete_rc(std::size_t r, std::size_t c) {
    rc_dead_.set(r, c);
    rc_dead_in_.set(c, r);
    ++state_.audit.deleted;
    if (audit_on_) deleted_log_.insert(key(RtoC, r, c));
  }
  void delete_cr(std::size_t c, std::size_t r) {
    cr_dead_.set(c, r);
    cr_dead_in_.set(r, c);
    ++state_.audit.deleted;
    if (audit_on_) deleted_log_.insert(key(CtoR, c, r));
  }

  void remove_row(std::size_t r) {
    if (r >= n_ || !test_bit(r_alive_, r)) return;
    set_bit(r_alive_, r, false);
    removed_r_[r] = true;
    --frontier_size_;
  }
  void remove_col(std::size_t c) {
    set_bit(c_alive_, c, false);
    removed_c_[c] = true;
  }

  void drop_exposed_of_row(std::size_t r, const std::vector<std::size_t>& out,
                           const std::vector<std::size_t>& in) {
    for (std::size_t c : out) delete_rc(r, c);
    for (std::size_t c : in) delete_cr(c, r);
  }

  bool window_has_candidate(std::size_t i) const {
    const std::size_t last = std::min(n_ - 1, i + d_);
    for (std::size_t j = i + 1; j <= last; ++j)
      if (test_bit(r_alive_, j)) return true;
    return false;
  }

  void step() {
    const std::size_t i = first_set(r_alive_);
    const auto out_i = expose_out_r(i);
    const auto in_i = expose_in_r(i);

    // Mutual arc among r_i's exposed arcs.
    for (std::size_t c : out_i) {
      if (std::binary_search(in_i.begin(), in_i.end(), c)) {
        state_.pne = PurePair{i, c};
        return;
      }
    }

    if (d_ > 0 && !out_i.empty() && !in_i.empty() && window_has_candidate(i)) {
      const std::size_t stride = words_for(n_);
      std::vector<std::vector<std::size_t>> out_p(out_i.size()), in_q(in_i.size());
      std::vector<Word> reach_p(stride, 0), reach_q(stride, 0);
      for (std::size_t a = 0; a < out_i.size(); ++a) {
        out_p[a] = expose_out_c(out_i[a]);
        for (std::size_t r : out_p[a]) {
          if (r == i) {  // c_p -> r_i closes a 2-cycle with r_i -> c_p
            state_.pne = PurePair{i, out_i[a]};
            return;
          }
          set_bit(reach_p, r, true);
        }
      }
      for (std::size_t b = 0; b < in_i.size(); ++b) {
        in_q[b] = expose_in_c(in_i[b]);
        for (std::size_t r : in_q[b]) {
          if (r == i) {  // r_i -> c_q closes a 2-cycle with c_q -> r_i
            state_.pne = PurePair{i, in_i[b]};
            return;
          }
          set_bit(reach_q, r, true);
        }
      }

      const std::size_t last = std::min(n_ - 1, i + d_);
      std::size_t j = kNoBit;
      for (std::size_t cand = i + 1; cand <= last; ++cand) {
        if (test_bit(r_alive_, cand) && test_bit(reach_p, cand) && test_bit(reach_q, cand)) {
          j = cand;
          break;
        }
      }
      if (j != kNoBit) {
        auto pick = [j](const std::vector<std::vector<std::size_t>>& lists) {
          for (std::size_t a = 0; a < lists.size(); ++a)
            if (std::binary_search(lists[a].begin(), lists[a].end(), j)) return a;
          return lists.size();
        };
        const std::size_t a = pick(out_p);
        const std::size_t b = pick(in_q);
        const std::size_t cp = out_i[a], cq = in_i[b];
        state_.cycles.push_back(CycleCandidate{{i, j}, {cp, cq}});

        for (std::size_t r : out_p[a]) delete_cr(cp, r);
        for (std::size_t r : in_q[b]) delete_rc(r, cq);
        drop_exposed_of_row(i, out_i, in_i);
        remove_row(i);
        remove_row(i + 1);
        remove_row(j);
        remove_col(cp);
        remove_col(cq);
        return;
      }
    }

    drop_exposed_of_row(i, out_i, in_i);
    remove_row(i);
  }

  std::size_t n_;
  std::size_t d_;
  std::size_t m_;
  bool audit_on_;
  BitMatrix rc_, cr_, rc_in_, cr_in_;
  BitMatrix rc_dead_, rc_dead_in_, cr_dead_, cr_dead_in_;
  std::vector<Word> r_alive_, c_alive_;
  std::vector<bool> removed_r_, removed_c_;
  std::unordered_set<std::uint64_t> deleted_log_;
  std::size_t frontier_size_ = 0;
  PairingState state_;
};

}  // namespace

PairingState pairing_procedure(const GameDigraph& d, const Regime2Params& params,
                               const PairingOptions& options) {
  return PairingRun(d, params, options).run();
}

}  // namespace wlnash
