#pragma once

#include <cstddef>
#include <vector>

#include "regneck/necklace.hpp"

namespace regneck {

inline constexpr std::size_t kDefaultBalancedEnumerationLimit = 24;

// The |w| length-q prefixes of sigma^0(w), ..., sigma^{|w|-1}(w), with
// multiplicity. Throws InvalidArgument unless 1 <= q <= |w|.
std::vector<BinaryWord> cyclic_subwords(const BinaryWord& w, std::size_t q);

// For every length q, the weights of the cyclic subwords of length q span
// at most one value apart.
bool is_balanced(const BinaryWord& w);

// Every balanced word of length n and weight k, lexicographically sorted.
// Brute force over C(n, k) words; throws GuardExceeded when n > max_length
// and InvalidArgument when n == 0 or k > n.
std::vector<BinaryWord> enumerate_balanced(
    std::size_t n, std::size_t k, std::size_t max_length = kDefaultBalancedEnumerationLimit);

// is_regular(from_word(w)).
bool word_is_regular_config(const BinaryWord& w);

}  // namespace regneck
