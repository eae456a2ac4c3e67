#include "regneck/regularity.hpp"

#include <algorithm>
#include <limits>

#include "regneck/error.hpp"

namespace regneck {

namespace {

__extension__ typedef __int128 Wide;

// Materialised necklaces are bounded so that an absurd (a, b) fails cleanly
// instead of exhausting memory.
constexpr Count kMaxBeads = Count{1} << 32;

// prefix[i] = x_0 + ... + x_{i-1} over the sequence repeated twice.
std::vector<Count> doubled_prefix(std::span<const Count> xs) {
  const std::size_t b = xs.size();
  std::vector<Count> prefix(2 * b + 1, 0);
  for (std::size_t i = 0; i < 2 * b; ++i) prefix[i + 1] = prefix[i] + xs[i % b];
  return prefix;
}

}  // namespace

WindowStats window_stats(const Configuration& cfg) {
  const std::size_t b = cfg.black_count();
  if (b == 0) throw InvalidArgument("window statistics need at least one black bead");

  const auto prefix = doubled_prefix(cfg.chars());
  auto window = [&](std::size_t i, std::size_t len) { return prefix[i + len] - prefix[i]; };

  WindowStats stats;
  stats.red = cfg.red_count();
  stats.black = b;
  stats.min_sums.assign(b + 2, 0);
  stats.max_sums.assign(b, 0);
  for (std::size_t j = 1; j <= b; ++j) {
    Count lo = std::numeric_limits<Count>::max();
    for (std::size_t i = 0; i < b; ++i) lo = std::min(lo, window(i, j));
    stats.min_sums[j + 1] = lo;
  }
  for (std::size_t j = 0; j < b; ++j) {
    Count hi = 0;
    for (std::size_t i = 0; i < b; ++i) hi = std::max(hi, window(i, j + 1));
    stats.max_sums[j] = hi;
  }
  if (cfg.red_count() > 0) stats.max_all_black = cfg.red_count() - 1;
  return stats;
}

bool is_regular(const Configuration& cfg) {
  if (cfg.degenerate()) return true;
  const std::size_t b = cfg.black_count();
  const Wide a = cfg.red_count();
  const Wide wb = static_cast<Wide>(b);
  const auto prefix = doubled_prefix(cfg.chars());
  const std::size_t max_k = 1 + b / 2;
  for (std::size_t k = 1; k <= max_k; ++k) {
    const Wide expected = a * static_cast<Wide>(k);
    for (std::size_t i = 0; i < b; ++i) {
      const Wide scaled = static_cast<Wide>(prefix[i + k] - prefix[i]) * wb;
      if (!(expected - wb < scaled && scaled < expected + wb)) return false;
    }
  }
  return true;
}

bool is_regular_via_mu(const Configuration& cfg) {
  const auto stats = window_stats(cfg);
  const Wide a = stats.red;
  const Wide b = static_cast<Wide>(stats.black);
  for (std::int64_t j = -1; j <= static_cast<std::int64_t>(stats.black); ++j) {
    if (!(b * (1 + static_cast<Wide>(stats.mu(j))) > a * j)) return false;
  }
  return true;
}

Configuration reduce(const Configuration& cfg, std::int64_t t) {
  if (t < 0) throw InvalidArgument("reduction amount must be non-negative");
  if (cfg.black_count() == 0) return cfg;
  const auto amount = static_cast<Count>(t);
  std::vector<Count> gaps(cfg.chars().begin(), cfg.chars().end());
  for (auto& x : gaps) {
    if (x < amount) throw InvalidArgument("every gap must hold at least t red beads");
    x -= amount;
  }
  return Configuration(std::move(gaps));
}

Fragment assemble_fragments(Count x_count, const Fragment& x, Count y_count,
                            const Fragment& y) {
  if (x_count + y_count == 0) throw InvalidArgument("necklace must have at least one fragment");
  if (x.empty() || y.empty()) throw InvalidArgument("fragments must be non-empty");
  if (x_count < y_count) return assemble_fragments(y_count, y, x_count, x);
  if (y_count == 0) {
    Fragment out;
    for (Count i = 0; i < x_count; ++i) out.insert(out.end(), x.begin(), x.end());
    return out;
  }
  const Count copies = x_count / y_count;
  const Count rest = x_count % y_count;
  // Z = {Y, X, ..., X} with `copies` X fragments.
  Fragment z = y;
  for (Count i = 0; i < copies; ++i) z.insert(z.end(), x.begin(), x.end());
  if (rest != 0) return assemble_fragments(y_count, z, rest, x);
  Fragment out;
  out.reserve(z.size() * y_count);
  for (Count i = 0; i < y_count; ++i) out.insert(out.end(), z.begin(), z.end());
  return out;
}

BinaryWord find_regular_word(Count red, Count black) {
  Count n = 0;
  if (__builtin_add_overflow(red, black, &n)) throw InvalidArgument("a + b overflows 64 bits");
  if (n == 0) throw InvalidArgument("CONF(0, 0) is empty");
  if (n > kMaxBeads) throw InvalidArgument("necklace too large to materialise");
  return BinaryWord(assemble_fragments(red, Fragment{1}, black, Fragment{0}));
}

Configuration find_regular(Count red, Count black) {
  if (black == 0) {
    if (red == 0) throw InvalidArgument("CONF(0, 0) is empty");
    return Configuration::all_red(red);
  }
  if (red == 0) return Configuration(std::vector<Count>(black, 0));
  return canonical(from_word(find_regular_word(red, black)));
}

}  // namespace regneck
