#include "regneck/duality.hpp"

namespace regneck {

Configuration dual(const Configuration& cfg) { return from_word(to_word(cfg).flipped()); }

}  // namespace regneck
