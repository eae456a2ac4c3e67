#include "regneck/shift_graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "regneck/error.hpp"
#include "regneck/regularity.hpp"

namespace regneck {

namespace {

__extension__ typedef unsigned __int128 Wide;

Count sub_mod(Count x, Count y, Count n) {
  x %= n;
  y %= n;
  return x >= y ? x - y : n - (y - x);
}

void require_closing(const Configuration& cfg, const ShiftGraph& graph) {
  const Wide total = static_cast<Wide>(cfg.red_count()) * graph.stride() + cfg.black_count();
  if (total != graph.order()) {
    std::ostringstream msg;
    msg << "walk does not close: a*m + b = " << cfg.red_count() << "*" << graph.stride() << " + "
        << cfg.black_count() << " != n = " << graph.order();
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

ShiftGraph::ShiftGraph(Count order, Count stride) : n_(order), m_(stride) {
  if (order > kMaxShiftGraphOrder) throw InvalidArgument("shift graph order exceeds 2^62");
  if (stride < 2 || stride >= order) {
    std::ostringstream msg;
    msg << "stride must satisfy 2 <= m < n (got n=" << order << ", m=" << stride << ")";
    throw InvalidArgument(msg.str());
  }
}

CycleSeq::CycleSeq(const ShiftGraph& graph, std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidArgument("a cycle needs at least one vertex");
  const std::size_t d = vertices_.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (!graph.has_edge(vertices_[i], vertices_[(i + 1) % d])) {
      std::ostringstream msg;
      msg << "no edge " << vertices_[i] << " -> " << vertices_[(i + 1) % d] << " in Shift("
          << graph.order() << "," << graph.stride() << ")";
      throw InvalidArgument(msg.str());
    }
  }
  auto sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("cycle repeats a vertex");
  }
}

Decomposition decompose(Count n, Count m) {
  if (m < 2 || m >= n) {
    std::ostringstream msg;
    msg << "stride must satisfy 2 <= m < n (got n=" << n << ", m=" << m << ")";
    throw InvalidArgument(msg.str());
  }
  Decomposition out;
  out.red = n / m;
  out.black = n % m;
  out.cycle_length = out.red + out.black;
  out.cycle_count = n / out.cycle_length;
  return out;
}

std::vector<Count> differential_sequence(std::span<const Vertex> seq, Count n) {
  if (seq.empty()) throw InvalidArgument("differential sequence of an empty vertex sequence");
  if (n == 0) throw InvalidArgument("modulus must be positive");
  std::vector<Count> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out[i] = sub_mod(seq[(i + 1) % seq.size()], seq[i], n);
  }
  return out;
}

Configuration config_of_cycle(const CycleSeq& cycle, const ShiftGraph& graph) {
  const auto steps = differential_sequence(cycle.vertices(), graph.order());
  std::vector<std::uint8_t> bits;
  bits.reserve(steps.size());
  for (Count step : steps) {
    if (step == graph.stride()) {
      bits.push_back(1);
    } else if (step == 1) {
      bits.push_back(0);
    } else {
      throw InvalidArgument("cycle step " + std::to_string(step) + " is neither 1 nor m");
    }
  }
  return from_word(BinaryWord(std::move(bits)));
}

std::vector<Count> necklace_steps(const Configuration& cfg, const ShiftGraph& graph) {
  require_closing(cfg, graph);
  std::vector<Count> steps;
  steps.reserve(cfg.bead_count());
  if (cfg.black_count() == 0) {
    steps.assign(cfg.red_count(), graph.stride());
    return steps;
  }
  for (Count x : cfg.chars()) {
    steps.insert(steps.end(), x, graph.stride());
    steps.push_back(1);
  }
  return steps;
}

CycleSeq generic_cycle(Vertex start, const Configuration& cfg, const ShiftGraph& graph) {
  if (start >= graph.order()) throw InvalidArgument("start vertex outside the graph");
  const auto steps = necklace_steps(cfg, graph);
  std::vector<Vertex> vertices;
  vertices.reserve(steps.size());
  Vertex v = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    vertices.push_back(v);
    v = steps[i] == 1 ? graph.unit_successor(v) : graph.stride_successor(v);
  }
  return CycleSeq(graph, std::move(vertices));
}

std::vector<Count> differential_set(std::span<const Vertex> vertices, Count n) {
  if (n == 0) throw InvalidArgument("modulus must be positive");
  std::vector<Count> out;
  out.reserve(vertices.size() * vertices.size());
  for (Vertex x : vertices) {
    for (Vertex y : vertices) out.push_back(sub_mod(x, y, n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Count> differential_set_closed_form(const Configuration& cfg,
                                                const ShiftGraph& graph) {
  require_closing(cfg, graph);
  const Count m = graph.stride();
  std::vector<Count> out;
  auto add_range = [&](Count j, Count lo, Count hi) {
    if (lo > hi) return;
    for (Count p = lo; p <= hi; ++p) out.push_back(p * m + j);
  };

  if (cfg.black_count() == 0) {
    add_range(0, 0, cfg.red_count() - 1);
  } else {
    const auto stats = window_stats(cfg);
    const Count b = stats.black;
    add_range(0, 0, stats.xi(0));
    for (Count j = 1; j < b; ++j) add_range(j, stats.mu(static_cast<std::int64_t>(j) - 1), stats.xi(j));
    if (stats.max_all_black) {
      add_range(b, stats.mu(static_cast<std::int64_t>(b) - 1), *stats.max_all_black);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DisjointnessCertificate certify_disjoint(std::span<const CycleSeq> cycles) {
  DisjointnessCertificate cert;
  std::unordered_map<Vertex, std::size_t> owner;
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    for (Vertex v : cycles[j].vertices()) {
      auto [it, inserted] = owner.emplace(v, j);
      if (!inserted && it->second != j) {
        cert.disjoint = false;
        cert.first_violation = std::make_pair(it->second, j);
        return cert;
      }
    }
  }
  return cert;
}

bool verify_disjoint(const Packing& packing) { return certify_disjoint(packing.cycles).disjoint; }

Packing build_packing(Count n, Count m) {
  const auto parts = decompose(n, m);
  const ShiftGraph graph(n, m);
  // m | n gives the all-red necklace, whose cycles are the cosets of <m>.
  const Configuration necklace = parts.black == 0 ? Configuration::all_red(parts.red)
                                                  : find_regular(parts.red, parts.black);

  Packing packing{graph, {}, {}};
  packing.cycles.reserve(parts.cycle_count);
  const Count offset_step = m - 1;
  Vertex offset = 0;
  for (Count i = 0; i < parts.cycle_count; ++i) {
    packing.cycles.push_back(generic_cycle(offset, necklace, graph));
    offset = static_cast<Vertex>((static_cast<Wide>(offset) + offset_step) % n);
  }
  packing.certificate = certify_disjoint(packing.cycles);
  if (!packing.certificate.disjoint) {
    const auto [i, j] = *packing.certificate.first_violation;
    std::ostringstream msg;
    msg << "packing of Shift(" << n << "," << m << ") has intersecting cycles " << i << " and "
        << j;
    throw TheoremViolation(msg.str());
  }
  return packing;
}

std::string to_dot(const ShiftGraph& graph, const Packing* packing) {
  const Count n = graph.order();
  // Cycle index owning each vertex / edge source, if any.
  std::unordered_map<Vertex, std::size_t> vertex_cycle;
  std::unordered_map<Vertex, std::pair<Vertex, std::size_t>> cycle_edge;
  if (packing != nullptr) {
    for (std::size_t c = 0; c < packing->cycles.size(); ++c) {
      const auto vs = packing->cycles[c].vertices();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        vertex_cycle.emplace(vs[i], c);
        cycle_edge.emplace(vs[i], std::make_pair(vs[(i + 1) % vs.size()], c));
      }
    }
  }
  auto colour = [](std::size_t c) { return c % 9 + 1; };

  std::ostringstream out;
  out << "digraph \"Shift(" << n << "," << graph.stride() << ")\" {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < n; ++v) {
    out << "  " << v << " [label=\"" << v << "\"";
    if (auto it = vertex_cycle.find(v); it != vertex_cycle.end()) {
      out << ", style=filled, colorscheme=set19, fillcolor=" << colour(it->second);
    }
    out << "];\n";
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto edge_it = cycle_edge.find(v);
    for (Vertex to : graph.successors(v)) {
      const bool unit = to == graph.unit_successor(v);
      out << "  " << v << " -> " << to << " [style=" << (unit ? "solid" : "dashed");
      if (edge_it != cycle_edge.end() && edge_it->second.first == to) {
        out << ", colorscheme=set19, color=" << colour(edge_it->second.second)
            << ", penwidth=2";
      }
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace regneck
