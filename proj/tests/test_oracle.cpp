#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "doctest.h"
#include "regneck/error.hpp"
#include "regneck/oracle.hpp"
#include "regneck/regularity.hpp"
#include "support/brute.hpp"

using namespace regneck;

namespace {

using VList = std::vector<Vertex>;

std::vector<Count> chars_of(const Configuration& c) { return {c.chars().begin(), c.chars().end()}; }

bool contains_cycle(const std::vector<CycleSeq>& cycles, const VList& vs) {
  return std::any_of(cycles.begin(), cycles.end(), [&](const CycleSeq& c) {
    return VList(c.vertices().begin(), c.vertices().end()) == vs;
  });
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv("REGNECK_GUARD_N", value, 1); }
  ~EnvGuard() { ::unsetenv("REGNECK_GUARD_N"); }
};

}  // namespace

TEST_CASE("enumerate_configurations examples") {
  const auto c22 = enumerate_configurations(2, 2);
  REQUIRE(c22.size() == 2);
  CHECK(chars_of(c22[0]) == std::vector<Count>{0, 2});
  CHECK(chars_of(c22[1]) == std::vector<Count>{1, 1});

  const auto c11 = enumerate_configurations(1, 1);
  REQUIRE(c11.size() == 1);
  CHECK(chars_of(c11[0]) == std::vector<Count>{1});

  CHECK(enumerate_configurations(6, 4).size() == 22);
  CHECK(enumerate_configurations(4, 0).size() == 1);
  CHECK(enumerate_configurations(0, 4).size() == 1);
  CHECK_THROWS_AS(enumerate_configurations(0, 0), InvalidArgument);
  CHECK_THROWS_AS(enumerate_configurations(20, 5), GuardExceeded);
}

TEST_CASE("enumerate_configurations agrees with word orbits and Burnside") {
  for (Count a = 0; a <= 10; ++a) {
    for (Count b = 1; b <= 10; ++b) {
      const auto classes = enumerate_configurations(a, b);
      CHECK(classes.size() == brute::word_orbit_count(a, b));
      CHECK(classes.size() == brute::necklace_count_burnside(a, b));
      std::vector<brute::Seq> listed;
      for (const auto& c : classes) listed.push_back(chars_of(c));
      CHECK(listed == brute::classes(a, b));
    }
  }
}

TEST_CASE("count_regular") {
  CHECK(count_regular(6, 4) == 1);
  CHECK(count_regular(5, 5) == 1);
  CHECK(count_regular(0, 3) == 1);
  const auto c55 = enumerate_configurations(5, 5);
  const auto regular = std::find_if(c55.begin(), c55.end(), [](const auto& c) { return is_regular(c); });
  REQUIRE(regular != c55.end());
  CHECK(chars_of(*regular) == std::vector<Count>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(count_regular(13, 12), GuardExceeded);
}

TEST_CASE("enumerate_cycles") {
  const auto c93 = enumerate_cycles(ShiftGraph(9, 3));
  CHECK(c93.size() == 40);
  CHECK(contains_cycle(c93, {0, 3, 6}));
  CHECK(contains_cycle(c93, {0, 1, 2, 3, 4, 5, 6, 7, 8}));

  const auto c103 = enumerate_cycles(ShiftGraph(10, 3));
  CHECK(c103.size() == 49);
  CHECK(contains_cycle(c103, {0, 3, 6, 9}));

  CHECK(enumerate_cycles(ShiftGraph(4, 2)).size() == 7);
  CHECK(enumerate_cycles(ShiftGraph(7, 6)).size() == 9);

  OracleGuards tight;
  tight.max_cycles = 10;
  CHECK_THROWS_AS(enumerate_cycles(ShiftGraph(9, 3), tight), GuardExceeded);
  CHECK_THROWS_AS(enumerate_cycles(ShiftGraph(17, 3)), GuardExceeded);
}

TEST_CASE("enumerate_cycles sanity (n <= 11)") {
  for (Count n = 3; n <= 11; ++n) {
    for (Count m = 2; m < n; ++m) {
      const ShiftGraph g(n, m);
      const auto cycles = enumerate_cycles(g);
      std::set<VList> distinct;
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        const VList vs(cycles[i].vertices().begin(), cycles[i].vertices().end());
        CHECK(vs.front() == *std::min_element(vs.begin(), vs.end()));
        CHECK_NOTHROW(CycleSeq(g, vs));
        distinct.insert(vs);
        if (i > 0) {
          const auto& prev = cycles[i - 1];
          CHECK((prev.size() < cycles[i].size() || (prev.size() == cycles[i].size() && prev < cycles[i])));
        }
      }
      CHECK(distinct.size() == cycles.size());
      VList unit(n);
      std::iota(unit.begin(), unit.end(), Vertex{0});
      CHECK(contains_cycle(cycles, unit));
    }
  }
}

TEST_CASE("exact_nu0 examples") {
  const auto r93 = exact_nu0(ShiftGraph(9, 3));
  CHECK(r93.n == 9);
  CHECK(r93.m == 3);
  CHECK(r93.cycle_count_enumerated == 40);
  CHECK(r93.nu0_exact == 3);
  REQUIRE(r93.witness.size() == 3);
  CHECK(certify_disjoint(r93.witness).disjoint);

  CHECK(exact_nu0(ShiftGraph(10, 3)).nu0_exact == 2);
  CHECK(exact_nu0(ShiftGraph(4, 2)).nu0_exact == 2);
  CHECK(exact_nu0(ShiftGraph(7, 6)).nu0_exact == 3);
  CHECK(exact_nu0(ShiftGraph(9, 6)).nu0_exact == 3);
  CHECK(exact_nu0(ShiftGraph(12, 8)).nu0_exact == 4);

  CHECK_THROWS_AS(exact_nu0(ShiftGraph(15, 4)), GuardExceeded);
}

TEST_CASE("exact_nu0 is deterministic") {
  const auto x = exact_nu0(ShiftGraph(11, 4));
  const auto y = exact_nu0(ShiftGraph(11, 4));
  CHECK(x.nu0_exact == y.nu0_exact);
  CHECK(x.witness == y.witness);
  CHECK(x.search_nodes == y.search_nodes);
}

TEST_CASE("bound consistency (n <= 11)") {
  for (Count n = 3; n <= 11; ++n) {
    for (Count m = 2; m < n; ++m) {
      const auto report = exact_nu0(ShiftGraph(n, m));
      CHECK(report.nu0_exact >= build_packing(n, m).cycles.size());
      CHECK(report.witness.size() == report.nu0_exact);
      CHECK(certify_disjoint(report.witness).disjoint);
    }
  }
}

TEST_CASE("sequence corollary (n <= 60)") {
  for (Count n = 3; n <= 60; ++n) {
    for (Count m = 2; m < n; ++m) {
      const auto parts = decompose(n, m);
      const auto packing = build_packing(n, m);
      REQUIRE(packing.cycles.size() == parts.cycle_count);
      std::set<Vertex> used;
      for (const auto& c : packing.cycles) {
        CHECK(c.size() == parts.cycle_length);
        const auto steps = differential_sequence(c.vertices(), n);
        CHECK(std::all_of(steps.begin(), steps.end(), [&](Count s) { return s == 1 || s == m; }));
        CHECK(static_cast<Count>(std::count(steps.begin(), steps.end(), m)) == parts.red);
        for (Vertex v : c.vertices()) used.insert(v);
      }
      CHECK(used.size() == parts.cycle_count * parts.cycle_length);
    }
  }
}

TEST_CASE("guards from the environment") {
  {
    EnvGuard env("20");
    const auto g = OracleGuards::from_environment();
    CHECK(g.max_cycle_order == 20);
    CHECK(g.max_exact_order == 20);
    CHECK(g.max_config_beads == 24);
  }
  for (const char* bad : {"0", "64", "abc", "12x", "-3"}) {
    EnvGuard env(bad);
    CHECK_THROWS_AS(OracleGuards::from_environment(), InvalidArgument);
  }
  const auto defaults = OracleGuards::from_environment();
  CHECK(defaults.max_cycle_order == 16);
  CHECK(defaults.max_exact_order == 14);
}
