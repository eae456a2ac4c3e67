#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "regneck/balanced.hpp"
#include "regneck/cli.hpp"
#include "regneck/duality.hpp"
#include "regneck/error.hpp"
#include "regneck/oracle.hpp"
#include "regneck/regularity.hpp"
#include "regneck/shift_graph.hpp"
#include "regneck/symmetry.hpp"

namespace py = pybind11;
using namespace regneck;

namespace {

Configuration config_of(const std::vector<std::int64_t>& chars) { return from_characteristic(chars); }

std::vector<Count> chars_of(const Configuration& cfg) { return {cfg.chars().begin(), cfg.chars().end()}; }

std::vector<std::vector<Vertex>> cycle_lists(const std::vector<CycleSeq>& cycles) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : cycles) out.emplace_back(c.vertices().begin(), c.vertices().end());
  return out;
}

std::vector<CycleSeq> cycles_of(const ShiftGraph& graph, const std::vector<std::vector<Vertex>>& lists) {
  std::vector<CycleSeq> out;
  for (const auto& vs : lists) out.emplace_back(graph, vs);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Regular necklaces and disjoint cycle packings of shift graphs";

  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_AssertionError);

  m.def("find_regular", [](Count a, Count b) { return chars_of(find_regular(a, b)); },
        py::arg("a"), py::arg("b"));
  m.def("find_regular_word", [](Count a, Count b) { return find_regular_word(a, b).str(); },
        py::arg("a"), py::arg("b"));
  m.def("is_regular", [](const std::vector<std::int64_t>& chars) { return is_regular(config_of(chars)); },
        py::arg("chars"));
  m.def("canonical", [](const std::vector<std::int64_t>& chars) {
    return chars_of(canonical(config_of(chars)));
  }, py::arg("chars"));
  m.def("to_word", [](const std::vector<std::int64_t>& chars) { return to_word(config_of(chars)).str(); },
        py::arg("chars"));
  m.def("from_word", [](const std::string& word) {
    const auto cfg = from_word(BinaryWord::parse(word));
    return py::make_tuple(cfg.red_count(), chars_of(cfg));
  }, py::arg("word"), "(red count, characteristic sequence) of a bead word");
  m.def("dual", [](const std::vector<std::int64_t>& chars) {
    return chars_of(canonical(dual(config_of(chars))));
  }, py::arg("chars"));
  m.def("rotation_order", [](const std::vector<std::int64_t>& chars) {
    return rotation_group(config_of(chars)).order;
  }, py::arg("chars"));
  m.def("is_symmetric", [](const std::vector<std::int64_t>& chars) { return is_symmetric(config_of(chars)); },
        py::arg("chars"));

  m.def("is_balanced", [](const std::string& word) { return is_balanced(BinaryWord::parse(word)); },
        py::arg("word"));
  m.def("enumerate_balanced", [](std::size_t n, std::size_t k) {
    std::vector<std::string> out;
    for (const auto& w : enumerate_balanced(n, k)) out.push_back(w.str());
    return out;
  }, py::arg("n"), py::arg("k"));

  m.def("decompose", [](Count n, Count m) {
    const auto d = decompose(n, m);
    py::dict out;
    out["a"] = d.red;
    out["b"] = d.black;
    out["d"] = d.cycle_length;
    out["k"] = d.cycle_count;
    return out;
  }, py::arg("n"), py::arg("m"));
  m.def("build_packing", [](Count n, Count m) { return cycle_lists(build_packing(n, m).cycles); },
        py::arg("n"), py::arg("m"));
  m.def("verify_disjoint", [](Count n, Count m, const std::vector<std::vector<Vertex>>& cycles) {
    const ShiftGraph graph(n, m);
    return certify_disjoint(cycles_of(graph, cycles)).disjoint;
  }, py::arg("n"), py::arg("m"), py::arg("cycles"));
  m.def("differential_set", [](const std::vector<Vertex>& vertices, Count n) {
    return differential_set(vertices, n);
  }, py::arg("vertices"), py::arg("n"));
  m.def("differential_set_closed_form", [](const std::vector<std::int64_t>& chars, Count n, Count m) {
    return differential_set_closed_form(config_of(chars), ShiftGraph(n, m));
  }, py::arg("chars"), py::arg("n"), py::arg("m"));
  m.def("to_dot", [](Count n, Count m, bool with_packing) {
    const ShiftGraph graph(n, m);
    if (!with_packing) return to_dot(graph);
    const auto packing = build_packing(n, m);
    return to_dot(graph, &packing);
  }, py::arg("n"), py::arg("m"), py::arg("with_packing") = true);

  m.def("count_regular", [](Count a, Count b) { return count_regular(a, b, OracleGuards::from_environment()); },
        py::arg("a"), py::arg("b"));
  m.def("exact_nu0", [](Count n, Count m) {
    const auto r = exact_nu0(ShiftGraph(n, m), OracleGuards::from_environment());
    py::dict out;
    out["n"] = r.n;
    out["m"] = r.m;
    out["nu0"] = r.nu0_exact;
    out["cycles_enumerated"] = r.cycle_count_enumerated;
    out["search_nodes"] = r.search_nodes;
    out["witness"] = cycle_lists(r.witness);
    out["elapsed"] = r.elapsed.count();
    return out;
  }, py::arg("n"), py::arg("m"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run one command line; returns (exit code, stdout, stderr).");
}
