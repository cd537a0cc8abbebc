#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wlnash {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Dense square-or-rectangular bit matrix, row-major, one machine-word
/// bitset per row. Bits beyond `cols()` in the last word of a row are
/// always zero so that popcounts over a row equal the number of set entries.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)),
        words_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool test(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    Word& w = words_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = v ? (w | mask) : (w & ~mask);
  }
  void reset(std::size_t r, std::size_t c) { set(r, c, false); }

  std::span<const Word> row(std::size_t r) const {
    return {words_.data() + r * stride_, stride_};
  }
  std::span<Word> row(std::size_t r) {
    return {words_.data() + r * stride_, stride_};
  }

  std::size_t row_count(std::size_t r) const {
    std::size_t total = 0;
    for (Word w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool row_empty(std::size_t r) const {
    for (Word w : row(r))
      if (w != 0) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  BitMatrix transposed() const;

  /// Mask with the valid bits of a row's last word.
  Word tail_mask() const {
    const std::size_t rem = cols_ % kWordBits;
    return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

inline std::size_t and_count(std::span<const Word> a, std::span<const Word> b) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    total += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
  return total;
}

/// Index of the lowest set bit of `a & b`, or `npos` when disjoint.
inline constexpr std::size_t kNoBit = static_cast<std::size_t>(-1);

inline std::size_t first_common(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Word w = a[k] & b[k];
    if (w != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
  }
  return kNoBit;
}

inline std::size_t first_set(std::span<const Word> a) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(a[k]));
  return kNoBit;
}

/// Calls `fn(index)` for every set bit in ascending order; stops early when
/// `fn` returns false.
template <typename Fn>
void for_each_bit(std::span<const Word> bits, Fn&& fn) {
  for (std::size_t k = 0; k < bits.size(); ++k) {
    Word w = bits[k];
    while (w != 0) {
      const auto b = static_cast<std::size_t>(std::countr_zero(w));
      if (!fn(k * kWordBits + b)) return;
      w &= w - 1;
    }
  }
}

}  // namespace wlnash
