#include "regneck/necklace.hpp"

#include <algorithm>
#include <utility>

#include "regneck/error.hpp"

namespace regneck {

namespace {

Count checked_sum(std::span<const Count> xs) {
  Count total = 0;
  for (Count x : xs) {
    if (__builtin_add_overflow(total, x, &total)) {
      throw InvalidArgument("characteristic sequence sum overflows 64 bits");
    }
  }
  return total;
}

}  // namespace

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InvalidArgument("binary word must be non-empty");
  for (auto bit : bits_) {
    if (bit > 1) throw InvalidArgument("binary word entries must be 0 or 1");
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("binary word may only contain '0' and '1': '" +
                            std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

Count BinaryWord::weight() const noexcept {
  return static_cast<Count>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BinaryWord::str() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

BinaryWord BinaryWord::rotated(std::int64_t t) const {
  return BinaryWord(rotate(std::span<const std::uint8_t>(bits_), t));
}

BinaryWord BinaryWord::flipped() const {
  std::vector<std::uint8_t> out(bits_.size());
  std::transform(bits_.begin(), bits_.end(), out.begin(),
                 [](std::uint8_t bit) -> std::uint8_t { return bit ^ 1U; });
  return BinaryWord(std::move(out));
}

Configuration::Configuration(std::vector<Count> gaps)
    : red_(checked_sum(gaps)), chars_(std::move(gaps)) {
  Count n = 0;
  if (__builtin_add_overflow(red_, static_cast<Count>(chars_.size()), &n)) {
    throw InvalidArgument("bead count overflows 64 bits");
  }
}

Configuration::Configuration(Count red, std::vector<Count> gaps)
    : red_(red), chars_(std::move(gaps)) {}

Configuration Configuration::all_red(Count red) { return Configuration(red, {}); }

Configuration from_characteristic(std::span<const std::int64_t> xs) {
  std::vector<Count> gaps;
  gaps.reserve(xs.size());
  for (auto x : xs) {
    if (x < 0) {
      throw InvalidArgument("characteristic sequence entries must be >= 0");
    }
    gaps.push_back(static_cast<Count>(x));
  }
  return Configuration(std::move(gaps));
}

BinaryWord to_word(const Configuration& cfg) {
  if (cfg.empty()) throw InvalidArgument("the empty necklace has no word");
  std::vector<std::uint8_t> bits;
  bits.reserve(cfg.bead_count());
  if (cfg.black_count() == 0) {
    bits.assign(cfg.red_count(), 1);
    return BinaryWord(std::move(bits));
  }
  for (Count x : cfg.chars()) {
    bits.push_back(0);
    bits.insert(bits.end(), x, 1);
  }
  return BinaryWord(std::move(bits));
}

Configuration from_word(const BinaryWord& word) {
  const auto bits = word.bits();
  const auto first_zero = std::find(bits.begin(), bits.end(), 0);
  if (first_zero == bits.end()) return Configuration::all_red(word.size());

  const auto n = bits.size();
  const auto start = static_cast<std::size_t>(first_zero - bits.begin());
  std::vector<Count> gaps;
  gaps.reserve(word.zeros());
  for (std::size_t step = 0; step < n; ++step) {
    if (bits[(start + step) % n] == 0) {
      gaps.push_back(0);
    } else {
      ++gaps.back();
    }
  }
  return Configuration(std::move(gaps));
}

bool equivalent(std::span<const Count> xs, std::span<const Count> ys) {
  if (xs.size() != ys.size()) return false;
  const auto lx = static_cast<std::int64_t>(least_rotation(xs));
  const auto ly = static_cast<std::int64_t>(least_rotation(ys));
  return rotate(xs, lx) == rotate(ys, ly);
}

Configuration canonical(const Configuration& cfg) {
  if (cfg.black_count() == 0) return cfg;
  const auto shift = least_rotation(cfg.chars());
  return Configuration(rotate(cfg.chars(), static_cast<std::int64_t>(shift)));
}

}  // namespace regneck
