#include "regneck/balanced.hpp"

#include <algorithm>
#include <string>

#include "regneck/error.hpp"
#include "regneck/regularity.hpp"

namespace regneck {

std::vector<BinaryWord> cyclic_subwords(const BinaryWord& w, std::size_t q) {
  const std::size_t n = w.size();
  if (q < 1 || q > n) throw InvalidArgument("subword length must lie in [1, |w|]");
  std::vector<BinaryWord> out;
  out.reserve(n);
  std::vector<std::uint8_t> buf(q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < q; ++j) buf[j] = w[(i + j) % n];
    out.emplace_back(buf);
  }
  return out;
}

bool is_balanced(const BinaryWord& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> prefix(2 * n + 1, 0);
  for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + w[i % n];
  // q = n is trivially balanced: every rotation has the same weight.
  for (std::size_t q = 1; q < n; ++q) {
    std::size_t lo = q;
    std::size_t hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t weight = prefix[i + q] - prefix[i];
      lo = std::min(lo, weight);
      hi = std::max(hi, weight);
      if (hi - lo > 1) return false;
    }
  }
  return true;
}

std::vector<BinaryWord> enumerate_balanced(std::size_t n, std::size_t k,
                                           std::size_t max_length) {
  if (n == 0) throw InvalidArgument("word length must be at least 1");
  if (k > n) throw InvalidArgument("weight cannot exceed word length");
  if (n > max_length) {
    throw GuardExceeded("balanced-word enumeration limited to n <= " +
                        std::to_string(max_length));
  }
  std::vector<std::uint8_t> bits(n, 0);
  std::fill(bits.end() - static_cast<std::ptrdiff_t>(k), bits.end(), 1);
  std::vector<BinaryWord> out;
  do {
    BinaryWord word(bits);
    if (is_balanced(word)) out.push_back(std::move(word));
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

bool word_is_regular_config(const BinaryWord& w) { return is_regular(from_word(w)); }

}  // namespace regneck
