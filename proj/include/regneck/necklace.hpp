#pragma once

// Interchangeable models of a two-colour necklace: the characteristic
// sequence of red-run lengths between consecutive black beads, and the
// binary word (1 = red bead, 0 = black bead).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regneck {

using Count = std::uint64_t;

class BinaryWord {
 public:
  // Throws InvalidArgument on an empty sequence or an entry outside {0,1}.
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  // Parses text such as "0101101011".
  static BinaryWord parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  Count weight() const noexcept;
  Count zeros() const noexcept { return size() - weight(); }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }

  std::string str() const;

  // sigma^t: the word read starting at index t (mod length).
  BinaryWord rotated(std::int64_t t) const;

  // Swaps 0 and 1 everywhere.
  BinaryWord flipped() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// A necklace class in CONF(a, b) held through one characteristic sequence
// x_0..x_{b-1}. Two Configurations compare equal only if the stored
// sequences are identical; use equivalent() or canonical() for class
// equality.
class Configuration {
 public:
  // Throws InvalidArgument if the total bead count overflows.
  explicit Configuration(std::vector<Count> gaps);

  // The all-red necklace in CONF(a, 0).
  static Configuration all_red(Count red);

  Count red_count() const noexcept { return red_; }
  Count black_count() const noexcept { return chars_.size(); }
  Count bead_count() const noexcept { return red_ + chars_.size(); }
  std::span<const Count> chars() const noexcept { return chars_; }

  // True when only one colour is present (a = 0 or b = 0), including the
  // empty necklace.
  bool degenerate() const noexcept { return red_ == 0 || chars_.empty(); }
  bool empty() const noexcept { return bead_count() == 0; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Configuration(Count red, std::vector<Count> gaps);

  Count red_ = 0;
  std::vector<Count> chars_;
};

// Rejects negative entries and sums that overflow 64 bits.
Configuration from_characteristic(std::span<const std::int64_t> xs);

// 0 1^{x_0} 0 1^{x_1} ... 0 1^{x_{b-1}}; 1^a when b = 0.
// Throws InvalidArgument for the empty necklace.
BinaryWord to_word(const Configuration& cfg);

// Run lengths of 1s after each 0, read cyclically from the first 0.
Configuration from_word(const BinaryWord& word);

// True iff ys is a cyclic rotation of xs.
bool equivalent(std::span<const Count> xs, std::span<const Count> ys);

// Lexicographically least rotation of the characteristic sequence.
Configuration canonical(const Configuration& cfg);

// sigma^t on any sequence; t is taken modulo the length, negative allowed.
template <typename T>
std::vector<T> rotate(std::span<const T> xs, std::int64_t t) {
  std::vector<T> out;
  if (xs.empty()) return out;
  const auto len = static_cast<std::int64_t>(xs.size());
  auto shift = static_cast<std::size_t>(((t % len) + len) % len);
  out.reserve(xs.size());
  out.insert(out.end(), xs.begin() + shift, xs.end());
  out.insert(out.end(), xs.begin(), xs.begin() + shift);
  return out;
}

template <typename T>
std::vector<T> rotate(const std::vector<T>& xs, std::int64_t t) {
  return rotate(std::span<const T>(xs), t);
}

// Index of a lexicographically least rotation (Booth's algorithm, O(n)).
template <typename T>
std::size_t least_rotation(std::span<const T> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const T& sj = s[j % n];
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && !(sj == s[(k + static_cast<std::size_t>(i) + 1) % n])) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) {
        k = j - static_cast<std::size_t>(i) - 1;
      }
      i = fail[static_cast<std::size_t>(i)];
    }
    if (!(sj == s[(k + static_cast<std::size_t>(i) + 1) % n])) {
      // here i == -1
      if (sj < s[k % n]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

}  // namespace regneck
