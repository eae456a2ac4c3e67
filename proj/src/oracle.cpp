#include "regneck/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>

#include "regneck/error.hpp"
#include "regneck/regularity.hpp"

namespace regneck {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxMaskOrder = 63;

void collect_compositions(Count remaining, std::size_t slot, std::vector<Count>& parts,
                          std::set<std::vector<Count>>& classes) {
  if (slot + 1 == parts.size()) {
    parts[slot] = remaining;
    const auto rep = canonical(Configuration(parts));
    classes.emplace(rep.chars().begin(), rep.chars().end());
    return;
  }
  for (Count x = 0; x <= remaining; ++x) {
    parts[slot] = x;
    collect_compositions(remaining - x, slot + 1, parts, classes);
  }
}

class CycleCollector {
 public:
  CycleCollector(const ShiftGraph& graph, std::size_t limit)
      : graph_(graph), limit_(limit), on_path_(graph.order(), false) {}

  std::vector<CycleSeq> run() {
    for (Vertex s = 0; s < graph_.order(); ++s) {
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = true;
      extend(s);
      on_path_[s] = false;
    }
    return std::move(found_);
  }

 private:
  void extend(Vertex v) {
    for (Vertex u : graph_.successors(v)) {
      if (u == start_) {
        if (found_.size() == limit_) {
          throw GuardExceeded("cycle enumeration exceeded " + std::to_string(limit_) + " cycles");
        }
        found_.emplace_back(graph_, path_);
      } else if (u > start_ && !on_path_[u]) {
        on_path_[u] = true;
        path_.push_back(u);
        extend(u);
        path_.pop_back();
        on_path_[u] = false;
      }
    }
  }

  const ShiftGraph& graph_;
  std::size_t limit_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
  std::vector<CycleSeq> found_;
};

class PackingSearch {
 public:
  PackingSearch(const ShiftGraph& graph, const std::vector<CycleSeq>& cycles)
      : cycles_(cycles), through_(graph.order()) {
    masks_.reserve(cycles.size());
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      Mask mask = 0;
      for (Vertex v : cycles[c].vertices()) mask |= Mask{1} << v;
      masks_.push_back(mask);
      // Cycles start at their least vertex, and any cycle through the least
      // free vertex must have it as its least one.
      through_[cycles[c].vertices().front()].push_back(c);
      girth_ = std::min<std::size_t>(girth_, cycles[c].size());
    }
  }

  void run(Mask free) { search(free); }

  std::size_t best() const { return best_.size(); }
  const std::vector<std::size_t>& best_set() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void search(Mask free) {
    ++nodes_;
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (free == 0 || cycles_.empty()) return;
    const std::size_t bound = chosen_.size() + std::popcount(free) / girth_;
    if (bound <= best_.size()) return;

    const auto v = static_cast<std::size_t>(std::countr_zero(free));
    for (std::size_t c : through_[v]) {
      if ((masks_[c] & ~free) != 0) continue;
      chosen_.push_back(c);
      search(free & ~masks_[c]);
      chosen_.pop_back();
    }
    search(free & ~(Mask{1} << v));
  }

  const std::vector<CycleSeq>& cycles_;
  std::vector<std::vector<std::size_t>> through_;
  std::vector<Mask> masks_;
  std::size_t girth_ = SIZE_MAX;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

std::size_t parse_guard(const char* text) {
  char* end = nullptr;
  const auto value = std::strtoull(text, &end, 10);
  if (end == text || *end != '\0' || value == 0 || value > kMaxMaskOrder) {
    throw InvalidArgument(std::string("REGNECK_GUARD_N must be an integer in [1, 63], got '") +
                          text + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

OracleGuards OracleGuards::from_environment() {
  OracleGuards guards;
  if (const char* text = std::getenv("REGNECK_GUARD_N"); text != nullptr && *text != '\0') {
    const auto n = parse_guard(text);
    guards.max_cycle_order = n;
    guards.max_exact_order = n;
  }
  return guards;
}

std::vector<Configuration> enumerate_configurations(Count red, Count black,
                                                    const OracleGuards& guards) {
  if (red + black == 0) throw InvalidArgument("CONF(0, 0) is empty");
  if (red > guards.max_config_beads || black > guards.max_config_beads ||
      red + black > guards.max_config_beads) {
    throw GuardExceeded("configuration enumeration limited to a + b <= " +
                        std::to_string(guards.max_config_beads));
  }
  if (black == 0) return {Configuration::all_red(red)};

  std::set<std::vector<Count>> classes;
  std::vector<Count> parts(black, 0);
  collect_compositions(red, 0, parts, classes);
  std::vector<Configuration> out;
  out.reserve(classes.size());
  for (const auto& chars : classes) out.emplace_back(chars);
  return out;
}

std::size_t count_regular(Count red, Count black, const OracleGuards& guards) {
  const auto classes = enumerate_configurations(red, black, guards);
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const auto& c) { return is_regular(c); }));
}

std::vector<CycleSeq> enumerate_cycles(const ShiftGraph& graph, const OracleGuards& guards) {
  if (graph.order() > guards.max_cycle_order) {
    throw GuardExceeded("cycle enumeration limited to n <= " +
                        std::to_string(guards.max_cycle_order));
  }
  auto cycles = CycleCollector(graph, guards.max_cycles).run();
  std::stable_sort(cycles.begin(), cycles.end(), [](const CycleSeq& x, const CycleSeq& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return cycles;
}

PackingSearchReport exact_nu0(const ShiftGraph& graph, const OracleGuards& guards) {
  const auto begin = std::chrono::steady_clock::now();
  if (graph.order() > guards.max_exact_order || graph.order() > kMaxMaskOrder) {
    throw GuardExceeded("exact packing search limited to n <= " +
                        std::to_string(std::min(guards.max_exact_order, kMaxMaskOrder)));
  }
  OracleGuards cycle_guards = guards;
  cycle_guards.max_cycle_order = std::max<std::size_t>(guards.max_cycle_order, graph.order());
  const auto cycles = enumerate_cycles(graph, cycle_guards);

  PackingSearch search(graph, cycles);
  const Mask all = graph.order() == 64 ? ~Mask{0} : (Mask{1} << graph.order()) - 1;
  search.run(all);

  PackingSearchReport report;
  report.n = graph.order();
  report.m = graph.stride();
  report.cycle_count_enumerated = cycles.size();
  report.nu0_exact = search.best();
  for (std::size_t c : search.best_set()) report.witness.push_back(cycles[c]);
  report.search_nodes = search.nodes();
  report.elapsed = std::chrono::steady_clock::now() - begin;
  return report;
}

}  // namespace regneck
