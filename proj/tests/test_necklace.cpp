#include <limits>
#include <random>

#include "doctest.h"
#include "regneck/error.hpp"
#include "regneck/necklace.hpp"
#include "support/brute.hpp"

using namespace regneck;

namespace {

Configuration cfg(std::vector<Count> xs) { return Configuration(std::move(xs)); }

std::vector<Count> chars_of(const Configuration& c) { return {c.chars().begin(), c.chars().end()}; }

}  // namespace

TEST_CASE("from_characteristic") {
  const std::vector<std::int64_t> fig{1, 2, 1, 2};
  auto c = from_characteristic(fig);
  CHECK(c.red_count() == 6);
  CHECK(c.black_count() == 4);
  CHECK_FALSE(c.degenerate());

  auto empty = from_characteristic(std::vector<std::int64_t>{});
  CHECK(empty.red_count() == 0);
  CHECK(empty.black_count() == 0);
  CHECK(empty.degenerate());
  CHECK(empty.empty());

  auto black = from_characteristic(std::vector<std::int64_t>{0, 0, 0});
  CHECK(black.red_count() == 0);
  CHECK(black.black_count() == 3);
  CHECK(black.degenerate());

  CHECK_THROWS_AS(from_characteristic(std::vector<std::int64_t>{1, -1}), InvalidArgument);
  const Count huge = std::numeric_limits<Count>::max();
  CHECK_THROWS_AS(cfg({huge, 1}), InvalidArgument);
  CHECK_THROWS_AS(cfg({huge}), InvalidArgument);  // a + b overflows
}

TEST_CASE("to_word and from_word") {
  CHECK(to_word(cfg({1, 2, 1, 2})).str() == "0101101011");
  CHECK(to_word(cfg({0, 0})).str() == "00");
  CHECK(to_word(Configuration::all_red(3)).str() == "111");
  CHECK_THROWS_AS(to_word(cfg({})), InvalidArgument);

  CHECK(chars_of(from_word(BinaryWord::parse("0101101011"))) == std::vector<Count>{1, 2, 1, 2});
  CHECK(chars_of(from_word(BinaryWord::parse("1100"))) == std::vector<Count>{0, 2});
  auto reds = from_word(BinaryWord::parse("1111"));
  CHECK(reds.red_count() == 4);
  CHECK(reds.black_count() == 0);
  CHECK(reds.degenerate());
}

TEST_CASE("BinaryWord invariants") {
  auto w = BinaryWord::parse("0011");
  CHECK(w.size() == 4);
  CHECK(w.weight() == 2);
  CHECK(w.zeros() == 2);
  CHECK(w.rotated(1).str() == "0110");
  CHECK(w.rotated(-1).str() == "1001");
  CHECK(w.flipped().str() == "1100");
  CHECK_THROWS_AS(BinaryWord::parse(""), InvalidArgument);
  CHECK_THROWS_AS(BinaryWord::parse("012"), InvalidArgument);
  CHECK_THROWS_AS(BinaryWord(std::vector<std::uint8_t>{0, 2}), InvalidArgument);
}

TEST_CASE("rotate") {
  const std::vector<Count> xs{1, 2, 1, 2};
  CHECK(rotate(xs, 1) == std::vector<Count>{2, 1, 2, 1});
  CHECK(rotate(xs, 4) == xs);
  CHECK(rotate(std::vector<Count>{3, 0, 1}, 2) == std::vector<Count>{1, 3, 0});
  CHECK(rotate(std::vector<Count>{3, 0, 1}, -1) == std::vector<Count>{1, 3, 0});
  CHECK(rotate(std::vector<Count>{}, 5).empty());

  // rotate(rotate(xs, s), t) == rotate(xs, s + t)
  const std::vector<Count> ys{4, 0, 2, 7, 1};
  for (int s = -6; s <= 6; ++s) {
    for (int t = -6; t <= 6; ++t) CHECK(rotate(rotate(ys, s), t) == rotate(ys, s + t));
  }
}

TEST_CASE("equivalent") {
  CHECK(equivalent(std::vector<Count>{1, 2, 1, 2}, std::vector<Count>{2, 1, 2, 1}));
  CHECK_FALSE(equivalent(std::vector<Count>{1, 2, 1, 2}, std::vector<Count>{1, 1, 2, 2}));
  CHECK_FALSE(equivalent(std::vector<Count>{1, 2}, std::vector<Count>{1, 2, 0}));
  CHECK(equivalent(std::vector<Count>{}, std::vector<Count>{}));
}

TEST_CASE("equivalence is an equivalence relation (sum <= 6, length <= 4)") {
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<brute::Seq> all;
    for (std::uint64_t s = 0; s <= 6; ++s) {
      for (auto& c : brute::compositions(s, len)) all.push_back(c);
    }
    for (const auto& x : all) {
      CHECK(equivalent(x, x));
      for (const auto& y : all) {
        const bool xy = equivalent(x, y);
        CHECK(xy == brute::equivalent(x, y));
        CHECK(xy == equivalent(y, x));
        if (!xy) continue;
        for (const auto& z : all) {
          if (equivalent(y, z)) CHECK(equivalent(x, z));
        }
      }
    }
  }
}

TEST_CASE("canonical") {
  CHECK(chars_of(canonical(cfg({2, 1, 2, 1}))) == std::vector<Count>{1, 2, 1, 2});
  CHECK(chars_of(canonical(cfg({5, 5, 5}))) == std::vector<Count>{5, 5, 5});
  CHECK(chars_of(canonical(cfg({3, 0, 1}))) == std::vector<Count>{0, 1, 3});
  CHECK(canonical(Configuration::all_red(4)) == Configuration::all_red(4));
}

TEST_CASE("least rotation agrees with the naive minimum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t len = 1 + rng() % 12;
    const std::uint64_t alphabet = 1 + rng() % 3;
    brute::Seq xs(len);
    for (auto& x : xs) x = rng() % alphabet;
    auto fast = canonical(Configuration(xs));
    CHECK(chars_of(fast) == brute::least_rotation(xs));
  }
}

TEST_CASE("round trip and rotation closure") {
  for (std::uint64_t a = 0; a <= 6; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      for (const auto& xs : brute::compositions(a, b)) {
        const Configuration c(xs);
        const auto back = from_word(to_word(c));
        CHECK(equivalent(back.chars(), c.chars()));
        CHECK(back.red_count() == a);
        CHECK(back.black_count() == b);
        CHECK(to_word(c).str() == brute::word_of(xs));
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(b); ++t) {
          CHECK(canonical(Configuration(rotate(xs, t))) == canonical(c));
        }
      }
    }
  }
}
