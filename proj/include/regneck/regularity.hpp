#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regneck/necklace.hpp"

namespace regneck {

// Extremal red counts over cyclic windows of the characteristic sequence.
struct WindowStats {
  Count red = 0;
  Count black = 0;
  // min_sums[j + 1] = mu_j, the least red count over j consecutive gaps,
  // for j = -1..b (mu_{-1} = mu_0 = 0, mu_b = a).
  std::vector<Count> min_sums;
  // max_sums[j] = xi_j, the largest red count over j + 1 consecutive gaps,
  // for j = 0..b-1.
  std::vector<Count> max_sums;
  // Largest red count in a window that holds all b black beads but is not
  // the whole necklace: a - 1, or nothing when a = 0.
  std::optional<Count> max_all_black;

  Count mu(std::int64_t j) const { return min_sums.at(static_cast<std::size_t>(j + 1)); }
  Count xi(std::size_t j) const { return max_sums.at(j); }
};

// Requires b >= 1.
WindowStats window_stats(const Configuration& cfg);

// Reg(a, b): every window of k gaps, 1 <= k <= 1 + floor(b/2), holds S reds
// with a*k - b < S*b < a*k + b. Degenerate necklaces are regular.
bool is_regular(const Configuration& cfg);

// b * (1 + mu_j) > a * j for all -1 <= j <= b. Requires b >= 1.
bool is_regular_via_mu(const Configuration& cfg);

// Removes t red beads from every gap: CONF(a, b) -> CONF(a - t*b, b).
// Throws InvalidArgument if t < 0 or some gap holds fewer than t reds.
Configuration reduce(const Configuration& cfg, std::int64_t t);

using Fragment = std::vector<std::uint8_t>;

// The fragment recursion FindRegular(x_count, X; y_count, Y): returns the
// concatenated necklace made of x_count copies of X and y_count copies of Y.
// Requires x_count + y_count >= 1 and non-empty fragments.
Fragment assemble_fragments(Count x_count, const Fragment& x, Count y_count,
                            const Fragment& y);

// The necklace word produced by the recursion with X = red bead (1) and
// Y = black bead (0), before canonicalisation.
BinaryWord find_regular_word(Count red, Count black);

// Canonical form of the unique regular configuration in CONF(a, b).
// Throws InvalidArgument when a + b = 0.
Configuration find_regular(Count red, Count black);

}  // namespace regneck
