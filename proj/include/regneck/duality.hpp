#pragma once

#include "regneck/necklace.hpp"

namespace regneck {

// Colour swap CONF(a, b) -> CONF(b, a), computed by flipping every bit of
// to_word(cfg) and reading the gaps back. The all-black necklace maps to the
// all-red one and vice versa. Throws InvalidArgument for the empty necklace.
Configuration dual(const Configuration& cfg);

}  // namespace regneck
