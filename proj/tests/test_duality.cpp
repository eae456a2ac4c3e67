#include <map>
#include <set>

#include "doctest.h"
#include "regneck/duality.hpp"
#include "regneck/oracle.hpp"
#include "regneck/regularity.hpp"
#include "support/brute.hpp"

using namespace regneck;

namespace {

std::vector<Count> chars_of(const Configuration& c) { return {c.chars().begin(), c.chars().end()}; }

}  // namespace

TEST_CASE("dual examples") {
  const auto d = dual(Configuration({1, 2, 1, 2}));
  CHECK(d.red_count() == 4);
  CHECK(d.black_count() == 6);
  CHECK(chars_of(canonical(d)) == std::vector<Count>{0, 1, 1, 0, 1, 1});

  for (Count t = 1; t <= 6; ++t) {
    const auto single = dual(Configuration({t}));
    std::vector<Count> expected(t, 0);
    expected.back() = 1;
    CHECK(single.red_count() == 1);
    CHECK(single.black_count() == t);
    CHECK(chars_of(canonical(single)) == expected);
  }

  const auto red = dual(Configuration({0, 0}));
  CHECK(red.degenerate());
  CHECK(red.red_count() == 2);
  CHECK(red.black_count() == 0);

  const auto black = dual(Configuration::all_red(3));
  CHECK(chars_of(black) == std::vector<Count>{0, 0, 0});
}

TEST_CASE("dual properties (a + b <= 14)") {
  for (Count n = 1; n <= 14; ++n) {
    for (Count a = 0; a <= n; ++a) {
      const Count b = n - a;
      std::set<std::vector<Count>> images;
      const auto classes = enumerate_configurations(a, b);
      for (const auto& c : classes) {
        const auto d = dual(c);
        CHECK(d.red_count() == b);
        CHECK(d.black_count() == a);
        CHECK(equivalent(dual(d).chars(), c.chars()));
        CHECK(is_regular(c) == is_regular(d));
        if (a > 0 && b > 0) {
          CHECK(equivalent(d.chars(), brute::dual_gaps(chars_of(c))));
        }
        images.insert(chars_of(canonical(d)));
      }
      // Injective on classes, and onto CONF(b, a).
      CHECK(images.size() == classes.size());
      CHECK(images.size() == enumerate_configurations(b, a).size());
    }
  }
}
