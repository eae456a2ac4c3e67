#pragma once

#include <vector>

#include "regneck/necklace.hpp"

namespace regneck {

// Rotations of Z_n that fix the coloured word of a necklace.
struct RotationGroup {
  Count order = 1;            // |Rot|
  Count generator_shift = 1;  // least k > 0 fixing the word; n / order
  std::vector<Count> member_shifts;  // 0, g, 2g, ... below n
};

// Requires a + b >= 1. Uses the prefix-function period of to_word(cfg).
RotationGroup rotation_group(const Configuration& cfg);

// Number of distinct labelled words in the rotation orbit: n / |Rot|.
Count orbit_size(const Configuration& cfg);

// |Rot| == gcd(a, b), with gcd(a, 0) = a.
bool is_symmetric(const Configuration& cfg);

}  // namespace regneck
