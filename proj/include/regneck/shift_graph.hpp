#pragma once

// Directed shift graphs Shift(n, m): the Cayley graph of Z_n with
// generators {1, m}. A cycle is a vertex sequence whose cyclic differences
// are all 1 (unit edge, black bead) or m (stride edge, red bead), so every
// cycle carries a necklace and every necklace with a*m + b = n walks out a
// cycle from any start vertex.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "regneck/necklace.hpp"

namespace regneck {

using Vertex = std::uint64_t;

inline constexpr Count kMaxShiftGraphOrder = Count{1} << 62;

class ShiftGraph {
 public:
  // Requires 2 <= stride < order <= 2^62.
  ShiftGraph(Count order, Count stride);

  Count order() const noexcept { return n_; }
  Count stride() const noexcept { return m_; }

  Vertex unit_successor(Vertex v) const noexcept { return v + 1 == n_ ? 0 : v + 1; }
  Vertex stride_successor(Vertex v) const noexcept { return v >= n_ - m_ ? v - (n_ - m_) : v + m_; }
  std::array<Vertex, 2> successors(Vertex v) const noexcept {
    return {unit_successor(v), stride_successor(v)};
  }
  bool has_edge(Vertex from, Vertex to) const noexcept {
    return from < n_ && (to == unit_successor(from) || to == stride_successor(from));
  }

  friend bool operator==(const ShiftGraph&, const ShiftGraph&) = default;

 private:
  Count n_;
  Count m_;
};

// A simple directed cycle of a ShiftGraph, as its vertex sequence.
class CycleSeq {
 public:
  // Throws InvalidArgument if the vertices repeat, fall outside the graph,
  // or some cyclic step is not an edge.
  CycleSeq(const ShiftGraph& graph, std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  friend bool operator==(const CycleSeq&, const CycleSeq&) = default;
  friend auto operator<=>(const CycleSeq&, const CycleSeq&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// n = a*m + b with 0 <= b < m; d = a + b beads per necklace; k = floor(n / d)
// copies in the packing.
struct Decomposition {
  Count red = 0;           // a
  Count black = 0;         // b
  Count cycle_length = 0;  // d
  Count cycle_count = 0;   // k

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Throws InvalidArgument unless 2 <= m < n.
Decomposition decompose(Count n, Count m);

// <v_1 - v_0, ..., v_0 - v_{d-1}> mod n. Throws on an empty sequence or n = 0.
std::vector<Count> differential_sequence(std::span<const Vertex> seq, Count n);

// Reads the cycle's differences as beads (m -> red, 1 -> black).
Configuration config_of_cycle(const CycleSeq& cycle, const ShiftGraph& graph);

// Steps m^{x_0} 1 m^{x_1} 1 ... m^{x_{b-1}} 1 (all m when b = 0).
// Throws InvalidArgument unless a*m + b = n.
std::vector<Count> necklace_steps(const Configuration& cfg, const ShiftGraph& graph);

// The cycle <v> of cfg: v followed by v plus each proper partial sum of
// necklace_steps.
CycleSeq generic_cycle(Vertex start, const Configuration& cfg, const ShiftGraph& graph);

// {x - y mod n : x, y in B}, sorted.
std::vector<Count> differential_set(std::span<const Vertex> vertices, Count n);

// D(V_cfg) from window statistics: {p*m + j : 0 <= j <= b,
// lo_j <= p <= hi_j} with lo_j = mu_{j-1}, hi_j = xi_j for j < b and
// hi_b = a - 1. Sorted. Same preconditions as necklace_steps.
std::vector<Count> differential_set_closed_form(const Configuration& cfg, const ShiftGraph& graph);

struct DisjointnessCertificate {
  bool disjoint = true;
  // First (i, j), i < j, of cycles sharing a vertex, scanning j upward.
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

DisjointnessCertificate certify_disjoint(std::span<const CycleSeq> cycles);

struct Packing {
  ShiftGraph graph;
  std::vector<CycleSeq> cycles;
  DisjointnessCertificate certificate;
};

// Recomputes the certificate for p.cycles.
bool verify_disjoint(const Packing& packing);

// k translates <i(m-1)>, i = 0..k-1, of the generic cycle of the regular
// configuration in CONF(a, b). Throws TheoremViolation if they intersect.
Packing build_packing(Count n, Count m);

// Graphviz rendering: unit edges solid, stride edges dashed, vertices and
// edges of packed cycle i coloured with colorscheme=set19 index i % 9 + 1.
std::string to_dot(const ShiftGraph& graph, const Packing* packing = nullptr);

}  // namespace regneck
