#include "regneck/symmetry.hpp"

#include <numeric>

namespace regneck {

namespace {

// Least cyclic period of a word: the smallest divisor p of n with
// w[i] == w[i + p mod n] for all i.
std::size_t cyclic_period(std::span<const std::uint8_t> w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  const std::size_t p = n - border[n - 1];
  return n % p == 0 ? p : n;
}

}  // namespace

RotationGroup rotation_group(const Configuration& cfg) {
  const auto word = to_word(cfg);
  const Count n = word.size();
  RotationGroup group;
  group.generator_shift = cyclic_period(word.bits());
  group.order = n / group.generator_shift;
  group.member_shifts.reserve(group.order);
  for (Count s = 0; s < n; s += group.generator_shift) group.member_shifts.push_back(s);
  return group;
}

Count orbit_size(const Configuration& cfg) {
  return cfg.bead_count() / rotation_group(cfg).order;
}

bool is_symmetric(const Configuration& cfg) {
  return rotation_group(cfg).order == std::gcd(cfg.red_count(), cfg.black_count());
}

}  // namespace regneck
