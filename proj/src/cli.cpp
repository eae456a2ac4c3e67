#include "regneck/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "regneck/balanced.hpp"
#include "regneck/duality.hpp"
#include "regneck/error.hpp"
#include "regneck/oracle.hpp"
#include "regneck/regularity.hpp"
#include "regneck/shift_graph.hpp"
#include "regneck/symmetry.hpp"

namespace regneck::cli {

namespace {

using json = nlohmann::json;

enum class Format { kText, kJson };

struct Output {
  json params = json::object();
  json result = json::object();
  std::string provenance;
  std::string text;
  int code = kOk;
};

json chars_json(const Configuration& cfg) {
  return json(std::vector<Count>(cfg.chars().begin(), cfg.chars().end()));
}

json vertices_json(const CycleSeq& cycle) {
  return json(std::vector<Vertex>(cycle.vertices().begin(), cycle.vertices().end()));
}

std::string join(std::span<const Count> xs, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

std::string bracketed(std::span<const Count> xs) { return "[" + join(xs, ",") + "]"; }

const char* yes_no(bool v) { return v ? "true" : "false"; }

// Evaluates f(0..count-1) on a small thread pool. Results land in index
// order; the lowest-index exception, if any, is rethrown after joining.
std::vector<json> parallel_map(std::size_t count, const std::function<json(std::size_t)>& f) {
  std::vector<json> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// Fills result.instances / violations / first_counterexample from a list of
// per-instance records carrying a boolean "pass".
void summarise(Output& o, std::vector<json> instances) {
  std::size_t violations = 0;
  json first = nullptr;
  for (const auto& inst : instances) {
    if (!inst.at("pass").get<bool>()) {
      if (violations++ == 0) first = inst;
    }
  }
  o.result["instance_count"] = instances.size();
  o.result["violations"] = violations;
  o.result["first_counterexample"] = first;
  o.result["instances"] = std::move(instances);
  if (violations != 0) o.code = kViolation;
}

std::string summary_line(const Output& o) {
  std::ostringstream out;
  out << o.result["instance_count"].get<std::size_t>() << " instances, "
      << o.result["violations"].get<std::size_t>() << " violations\n";
  if (!o.result["first_counterexample"].is_null()) {
    out << "first counterexample: " << o.result["first_counterexample"].dump() << "\n";
  }
  return out.str();
}

std::vector<std::int64_t> parse_chars(const std::string& text) {
  std::vector<std::int64_t> xs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string item = text.substr(pos, comma - pos);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidArgument("malformed characteristic sequence '" + text + "'");
    }
    xs.push_back(value);
    pos = comma + 1;
  }
  return xs;
}

bool one_rotation_orbit(const std::vector<BinaryWord>& words) {
  if (words.empty()) return false;
  std::set<std::string> orbit;
  for (std::size_t t = 0; t < words.front().size(); ++t) {
    orbit.insert(words.front().rotated(static_cast<std::int64_t>(t)).str());
  }
  std::set<std::string> listed;
  for (const auto& w : words) listed.insert(w.str());
  return orbit == listed;
}

// All (a, b) with a, b >= 0 and 1 <= a + b <= max_n, ordered by (n, a).
std::vector<std::pair<Count, Count>> red_black_pairs(Count max_n, bool both_positive) {
  std::vector<std::pair<Count, Count>> out;
  for (Count n = 1; n <= max_n; ++n) {
    for (Count a = 0; a <= n; ++a) {
      if (both_positive && (a == 0 || a == n)) continue;
      out.emplace_back(a, n - a);
    }
  }
  return out;
}

void require_beads(Count max_n, const OracleGuards& guards) {
  if (max_n > guards.max_config_beads) {
    throw GuardExceeded("configuration enumeration limited to a + b <= " +
                        std::to_string(guards.max_config_beads));
  }
}

// ---- commands ------------------------------------------------------------

Output cmd_regular(Count a, Count b) {
  Output o;
  o.params = {{"a", a}, {"b", b}};
  o.provenance =
      "Regular configurations exist for every (a, b) and are built by the fragment recursion.";
  const auto cfg = find_regular(a, b);
  const auto word = to_word(cfg).str();
  o.result = {{"a", a}, {"b", b}, {"chars", chars_json(cfg)}, {"word", word}};
  o.text = "chars: " + bracketed(cfg.chars()) + "\nword: " + word + "\n";
  return o;
}

Output cmd_check(const std::optional<std::string>& chars, const std::optional<std::string>& word) {
  if (chars.has_value() == word.has_value()) {
    throw InvalidArgument("give exactly one of --chars or --word");
  }
  Output o;
  o.provenance =
      "A necklace is regular when every window of black gaps holds the proportional number of "
      "red beads up to one; regularity of a word coincides with balance.";
  bool balanced = false;
  const auto cfg = [&] {
    if (chars) {
      o.params = {{"chars", *chars}};
      auto c = from_characteristic(parse_chars(*chars));
      if (c.empty()) throw InvalidArgument("necklace has no beads");
      balanced = is_balanced(to_word(c));
      return c;
    }
    o.params = {{"word", *word}};
    const auto w = BinaryWord::parse(*word);
    balanced = is_balanced(w);
    return from_word(w);
  }();
  const Count a = cfg.red_count();
  const Count b = cfg.black_count();
  const bool regular = is_regular(cfg);
  const auto rot = rotation_group(cfg).order;
  const bool symmetric = is_symmetric(cfg);
  const Count g = std::gcd(a, b);
  const auto d = canonical(dual(cfg));
  const auto canon = canonical(cfg);
  o.result = {{"a", a},
              {"b", b},
              {"chars", chars_json(cfg)},
              {"canonical", chars_json(canon)},
              {"word", to_word(cfg).str()},
              {"regular", regular},
              {"balanced", balanced},
              {"rot", rot},
              {"gcd", g},
              {"symmetric", symmetric},
              {"dual", chars_json(d)}};
  std::ostringstream text;
  text << "a=" << a << " b=" << b << " chars=" << bracketed(cfg.chars())
       << " canonical=" << bracketed(canon.chars()) << "\n"
       << "regular=" << yes_no(regular) << " balanced=" << yes_no(balanced) << "\n"
       << "symmetric=" << yes_no(symmetric) << " rot=" << rot << " gcd=" << g << "\n"
       << "dual=" << bracketed(d.chars()) << "\n";
  o.text = text.str();
  return o;
}

Output cmd_pack(Count n, Count m, const std::optional<std::string>& dot_path, bool verify) {
  Output o;
  o.params = {{"n", n}, {"m", m}, {"verify", verify}};
  if (dot_path) o.params["dot"] = *dot_path;
  o.provenance =
      "Translates of one regular necklace cycle by multiples of m-1 are pairwise vertex-disjoint, "
      "so Shift(n,m) packs at least floor(n/(a+b)) disjoint cycles.";
  const auto parts = decompose(n, m);
  const auto packing = build_packing(n, m);

  json cycles = json::array();
  for (const auto& c : packing.cycles) cycles.push_back(vertices_json(c));
  o.result = {{"n", n},
              {"m", m},
              {"a", parts.red},
              {"b", parts.black},
              {"d", parts.cycle_length},
              {"k", parts.cycle_count},
              {"cycles", std::move(cycles)}};

  std::ostringstream text;
  text << "Shift(" << n << "," << m << "): a=" << parts.red << " b=" << parts.black
       << " d=" << parts.cycle_length << " k=" << parts.cycle_count << "\n";
  for (std::size_t i = 0; i < packing.cycles.size(); ++i) {
    text << "cycle " << i << ": " << join(packing.cycles[i].vertices(), " ") << "\n";
  }
  if (verify) {
    const bool ok = verify_disjoint(packing);
    o.result["verified"] = ok;
    text << "verified: " << (ok ? "pairwise disjoint" : "INTERSECTING") << "\n";
    if (!ok) o.code = kTheoremViolation;
  }
  if (dot_path) {
    std::ofstream file(*dot_path);
    if (!file) throw InvalidArgument("cannot write DOT file '" + *dot_path + "'");
    file << to_dot(packing.graph, &packing);
    if (!file) throw InvalidArgument("cannot write DOT file '" + *dot_path + "'");
    o.result["dot"] = *dot_path;
    text << "dot: " << *dot_path << "\n";
  }
  o.text = text.str();
  return o;
}

Output cmd_oracle_unique(Count max_a, Count max_b, const OracleGuards& guards) {
  Output o;
  o.params = {{"max_a", max_a}, {"max_b", max_b}};
  o.provenance = "Each CONF(a,b) with a, b >= 1 holds exactly one regular configuration.";
  require_beads(max_a + max_b, guards);
  std::vector<std::pair<Count, Count>> keys;
  for (Count a = 1; a <= max_a; ++a) {
    for (Count b = 1; b <= max_b; ++b) keys.emplace_back(a, b);
  }
  auto instances = parallel_map(keys.size(), [&](std::size_t i) {
    const auto [a, b] = keys[i];
    const auto classes = enumerate_configurations(a, b, guards);
    std::vector<Configuration> regular;
    for (const auto& c : classes) {
      if (is_regular(c)) regular.push_back(c);
    }
    const bool matches = regular.size() == 1 && regular.front() == find_regular(a, b);
    return json{{"a", a}, {"b", b}, {"count", regular.size()}, {"matches_constructive", matches},
                {"pass", matches}};
  });
  std::ostringstream text;
  for (const auto& inst : instances) {
    text << "a=" << inst["a"] << " b=" << inst["b"] << " count=" << inst["count"]
         << (inst["pass"].get<bool>() ? " ok" : " VIOLATION") << "\n";
  }
  summarise(o, std::move(instances));
  o.text = text.str() + summary_line(o);
  return o;
}

Output cmd_oracle_nu0(Count n, Count m, const OracleGuards& guards) {
  Output o;
  o.params = {{"n", n}, {"m", m}};
  o.provenance =
      "The constructive packing is a lower bound on the cycle packing number of Shift(n,m).";
  const ShiftGraph graph(n, m);
  const auto report = exact_nu0(graph, guards);
  const auto constructive = build_packing(n, m).cycles.size();
  json witness = json::array();
  for (const auto& c : report.witness) witness.push_back(vertices_json(c));
  const bool consistent = report.nu0_exact >= constructive;
  o.result = {{"n", n},
              {"m", m},
              {"exact", report.nu0_exact},
              {"constructive", constructive},
              {"tight", report.nu0_exact == constructive},
              {"consistent", consistent},
              {"cycles_enumerated", report.cycle_count_enumerated},
              {"search_nodes", report.search_nodes},
              {"witness", std::move(witness)}};
  std::ostringstream text;
  text << "Shift(" << n << "," << m << "): exact=" << report.nu0_exact
       << " constructive=" << constructive
       << " tight=" << yes_no(report.nu0_exact == constructive) << "\n"
       << "cycles enumerated=" << report.cycle_count_enumerated
       << " search nodes=" << report.search_nodes << "\n";
  for (std::size_t i = 0; i < report.witness.size(); ++i) {
    text << "witness " << i << ": " << join(report.witness[i].vertices(), " ") << "\n";
  }
  o.text = text.str();
  if (!consistent) o.code = kViolation;
  return o;
}

Output cmd_oracle_balanced_count(Count max_n, const OracleGuards& guards) {
  Output o;
  o.params = {{"max_n", max_n}};
  o.provenance =
      "For 0 < k < n there are exactly n/gcd(k, n-k) balanced words of length n and weight k, "
      "forming one rotation orbit.";
  if (max_n > guards.max_balanced_length) {
    throw GuardExceeded("balanced enumeration limited to n <= " +
                        std::to_string(guards.max_balanced_length));
  }
  std::vector<std::pair<Count, Count>> keys;
  for (Count n = 2; n <= max_n; ++n) {
    for (Count k = 1; k < n; ++k) keys.emplace_back(n, k);
  }
  auto instances = parallel_map(keys.size(), [&](std::size_t i) {
    const auto [n, k] = keys[i];
    const auto words = enumerate_balanced(n, k, guards.max_balanced_length);
    const Count expected = n / std::gcd(k, n - k);
    const bool orbit = one_rotation_orbit(words);
    return json{{"n", n},
                {"k", k},
                {"count", words.size()},
                {"expected", expected},
                {"single_orbit", orbit},
                {"pass", words.size() == expected && orbit}};
  });
  std::ostringstream text;
  for (const auto& inst : instances) {
    text << "n=" << inst["n"] << " k=" << inst["k"] << " count=" << inst["count"]
         << " expected=" << inst["expected"]
         << (inst["pass"].get<bool>() ? " ok" : " VIOLATION") << "\n";
  }
  summarise(o, std::move(instances));
  o.text = text.str() + summary_line(o);
  return o;
}

json sweep_regularity(Count a, Count b, const OracleGuards& guards) {
  const auto classes = enumerate_configurations(a, b, guards);
  std::size_t regular = 0;
  json bad = nullptr;
  for (const auto& c : classes) {
    const bool r = is_regular(c);
    regular += r;
    if (b > 0 && r != is_regular_via_mu(c) && bad.is_null()) bad = chars_json(c);
  }
  const bool unique = regular == 1 && is_regular(find_regular(a, b));
  json inst = {{"a", a}, {"b", b}, {"regular_classes", regular},
               {"pass", unique && bad.is_null()}};
  if (!bad.is_null()) inst["criteria_disagree"] = bad;
  return inst;
}

json sweep_duality(Count a, Count b, const OracleGuards& guards) {
  json bad = nullptr;
  for (const auto& c : enumerate_configurations(a, b, guards)) {
    const auto d = dual(c);
    const bool ok = is_regular(c) == is_regular(d) && canonical(dual(d)) == canonical(c) &&
                    d.red_count() == b && d.black_count() == a;
    if (!ok) {
      bad = chars_json(c);
      break;
    }
  }
  json inst = {{"a", a}, {"b", b}, {"pass", bad.is_null()}};
  if (!bad.is_null()) inst["counterexample"] = bad;
  return inst;
}

json sweep_symmetry(Count a, Count b) {
  const auto cfg = find_regular(a, b);
  const auto rot = rotation_group(cfg).order;
  const Count g = std::gcd(a, b);
  return json{{"a", a}, {"b", b}, {"rot", rot}, {"gcd", g}, {"pass", rot == g}};
}

json sweep_balance(Count n) {
  json bad = nullptr;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<std::uint8_t> w(n);
    for (Count i = 0; i < n; ++i) w[i] = (bits >> (n - 1 - i)) & 1;
    const BinaryWord word(std::move(w));
    if (is_balanced(word) != word_is_regular_config(word)) {
      bad = word.str();
      break;
    }
  }
  json inst = {{"n", n}, {"pass", bad.is_null()}};
  if (!bad.is_null()) inst["counterexample"] = bad;
  return inst;
}

json sweep_shift(Count n, Count m) {
  json inst = {{"n", n}, {"m", m}};
  const auto parts = decompose(n, m);
  try {
    const auto packing = build_packing(n, m);
    const auto cfg = config_of_cycle(packing.cycles.front(), packing.graph);
    const auto closed = differential_set_closed_form(cfg, packing.graph);
    const bool formula =
        closed == differential_set(packing.cycles.front().vertices(), n);
    const bool sized = packing.cycles.size() == parts.cycle_count;
    inst["k"] = packing.cycles.size();
    inst["closed_form_matches"] = formula;
    inst["pass"] = formula && sized && packing.certificate.disjoint;
  } catch (const TheoremViolation& e) {
    inst["error"] = e.what();
    inst["pass"] = false;
  }
  return inst;
}

Output cmd_sweep(const std::string& suite, Count max_n, const OracleGuards& guards) {
  Output o;
  o.params = {{"suite", suite}, {"max_n", max_n}};
  std::function<json(std::size_t)> f;
  std::size_t count = 0;
  std::vector<std::pair<Count, Count>> keys;
  if (suite == "regularity" || suite == "duality") {
    require_beads(max_n, guards);
    keys = red_black_pairs(max_n, false);
    if (suite == "regularity") {
      o.provenance = "Each CONF(a,b) holds exactly one regular configuration.";
      f = [&](std::size_t i) { return sweep_regularity(keys[i].first, keys[i].second, guards); };
    } else {
      o.provenance = "A configuration is regular exactly when its colour-swapped dual is.";
      f = [&](std::size_t i) { return sweep_duality(keys[i].first, keys[i].second, guards); };
    }
    count = keys.size();
  } else if (suite == "symmetry") {
    o.provenance = "The rotation group of a regular configuration has order gcd(a, b).";
    keys = red_black_pairs(max_n, true);
    f = [&](std::size_t i) { return sweep_symmetry(keys[i].first, keys[i].second); };
    count = keys.size();
  } else if (suite == "balance") {
    o.provenance = "A binary word is balanced exactly when its configuration is regular.";
    if (max_n > guards.max_balanced_length) {
      throw GuardExceeded("balance sweep limited to n <= " +
                          std::to_string(guards.max_balanced_length));
    }
    f = [](std::size_t i) { return sweep_balance(i + 1); };
    count = max_n;
  } else if (suite == "shift") {
    o.provenance =
        "The constructed cycles of Shift(n,m) are pairwise vertex-disjoint and their difference "
        "sets follow the closed form.";
    for (Count n = 3; n <= max_n; ++n) {
      for (Count m = 2; m < n; ++m) keys.emplace_back(n, m);
    }
    f = [&](std::size_t i) { return sweep_shift(keys[i].first, keys[i].second); };
    count = keys.size();
  } else {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  summarise(o, parallel_map(count, f));
  o.result["suite"] = suite;
  o.text = "suite " + suite + ", max_n " + std::to_string(max_n) + ": " + summary_line(o);
  return o;
}

json envelope(const std::string& command, const Output& o) {
  return json{{"command", command},
              {"params", o.params},
              {"result", o.result},
              {"provenance", o.provenance}};
}

int report_error(const std::string& command, Format format, int code, const std::string& message,
                 std::ostream& out, std::ostream& err) {
  err << "error: " << message << "\n";
  if (format == Format::kJson) {
    Output o;
    o.result = {{"error", {{"code", code}, {"message", message}}}};
    out << envelope(command, o).dump(2) << "\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular necklaces and disjoint cycle packings of shift graphs", "regneck"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::optional<std::uint64_t> guard_n;
  std::string command;
  std::function<Output(const OracleGuards&)> action;

  Count a = 0, b = 0, n = 0, m = 0;
  auto* regular = app.add_subcommand("regular", "Build the regular configuration of CONF(A,B)");
  regular->add_option("A", a, "Red beads")->required();
  regular->add_option("B", b, "Black beads")->required();
  regular->callback([&] {
    command = "regular";
    action = [&](const OracleGuards&) { return cmd_regular(a, b); };
  });

  std::optional<std::string> chars, word;
  auto* check = app.add_subcommand("check", "Inspect one configuration or word");
  auto* chars_opt = check->add_option("--chars", chars, "Characteristic sequence x0,x1,...");
  check->add_option("--word", word, "Binary word, 1 = red, 0 = black")->excludes(chars_opt);
  check->callback([&] {
    command = "check";
    action = [&](const OracleGuards&) { return cmd_check(chars, word); };
  });

  std::optional<std::string> dot_path;
  bool verify = false;
  auto* pack = app.add_subcommand("pack", "Build disjoint cycles in Shift(N,M)");
  pack->add_option("N", n, "Graph order")->required();
  pack->add_option("M", m, "Stride")->required();
  pack->add_option("--dot", dot_path, "Write the graph with the packing as DOT");
  pack->add_flag("--verify", verify, "Re-check pairwise disjointness");
  pack->callback([&] {
    command = "pack";
    action = [&](const OracleGuards&) { return cmd_pack(n, m, dot_path, verify); };
  });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive cross-checks at small sizes");
  oracle->require_subcommand(1);
  oracle->add_option("--guard-n", guard_n, "Graph-order limit for cycle searches (1..63)")
      ->check(CLI::Range(1, 63));

  Count max_a = 10, max_b = 10, max_n = 12;
  auto* unique = oracle->add_subcommand("unique", "Count regular classes for each (a, b)");
  unique->add_option("--max-a", max_a)->capture_default_str();
  unique->add_option("--max-b", max_b)->capture_default_str();
  unique->callback([&] {
    command = "oracle unique";
    action = [&](const OracleGuards& g) { return cmd_oracle_unique(max_a, max_b, g); };
  });

  auto* nu0 = oracle->add_subcommand("nu0", "Exact cycle packing number of Shift(N,M)");
  nu0->add_option("N", n, "Graph order")->required();
  nu0->add_option("M", m, "Stride")->required();
  nu0->callback([&] {
    command = "oracle nu0";
    action = [&](const OracleGuards& g) { return cmd_oracle_nu0(n, m, g); };
  });

  auto* balanced = oracle->add_subcommand("balanced-count", "Count balanced words per (n, k)");
  balanced->add_option("--max-n", max_n)->capture_default_str();
  balanced->callback([&] {
    command = "oracle balanced-count";
    action = [&](const OracleGuards& g) { return cmd_oracle_balanced_count(max_n, g); };
  });

  std::string suite;
  auto* sweep = app.add_subcommand("sweep", "Check one family of properties exhaustively");
  sweep->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"regularity", "duality", "symmetry", "balance", "shift"}));
  sweep->add_option("--max-n", max_n)->capture_default_str();
  sweep->callback([&] {
    command = "sweep";
    action = [&](const OracleGuards& g) { return cmd_sweep(suite, max_n, g); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kBadInput;
  }

  const Format format = format_name == "json" ? Format::kJson : Format::kText;
  try {
    OracleGuards guards = OracleGuards::from_environment();
    if (guard_n) {
      guards.max_cycle_order = *guard_n;
      guards.max_exact_order = *guard_n;
    }
    const Output o = action(guards);
    if (format == Format::kJson) {
      out << envelope(command, o).dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const GuardExceeded& e) {
    return report_error(command, format, kGuardExceeded, e.what(), out, err);
  } catch (const TheoremViolation& e) {
    return report_error(command, format, kTheoremViolation, e.what(), out, err);
  } catch (const std::invalid_argument& e) {
    return report_error(command, format, kBadInput, e.what(), out, err);
  } catch (const std::length_error& e) {
    return report_error(command, format, kBadInput, e.what(), out, err);
  }
}

}  // namespace regneck::cli
