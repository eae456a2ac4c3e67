#pragma once

// Brute-force verifiers used to check the constructive results at desk
// scale. Everything here is exponential; each search has a size guard and
// exceeding it throws GuardExceeded rather than truncating.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "regneck/necklace.hpp"
#include "regneck/shift_graph.hpp"

namespace regneck {

struct OracleGuards {
  std::size_t max_config_beads = 24;     // enumerate_configurations: a + b
  std::size_t max_balanced_length = 24;  // enumerate_balanced: n
  std::size_t max_cycle_order = 16;      // enumerate_cycles: n
  std::size_t max_cycles = 1'000'000;    // enumerate_cycles: result size
  std::size_t max_exact_order = 14;      // exact_nu0: n

  // Defaults, with REGNECK_GUARD_N (if set) replacing both graph-order
  // guards. Values above 63 are rejected: vertex sets are 64-bit masks.
  static OracleGuards from_environment();
};

// Every class of CONF(a, b), each in canonical form, sorted by sequence.
std::vector<Configuration> enumerate_configurations(Count red, Count black,
                                                    const OracleGuards& guards = {});

// Classes of CONF(a, b) satisfying is_regular.
std::size_t count_regular(Count red, Count black, const OracleGuards& guards = {});

// All simple directed cycles, each rotated to start at its least vertex,
// sorted by length and then by vertex sequence.
std::vector<CycleSeq> enumerate_cycles(const ShiftGraph& graph, const OracleGuards& guards = {});

struct PackingSearchReport {
  Count n = 0;
  Count m = 0;
  std::size_t cycle_count_enumerated = 0;
  std::size_t nu0_exact = 0;
  std::vector<CycleSeq> witness;
  std::chrono::duration<double> elapsed{0};
  std::uint64_t search_nodes = 0;
};

// Maximum number of pairwise vertex-disjoint cycles, by branch and bound on
// the least free vertex. The witness is the first optimum met in the fixed
// cycle order, so the report is deterministic apart from `elapsed`.
PackingSearchReport exact_nu0(const ShiftGraph& graph, const OracleGuards& guards = {});

}  // namespace regneck
