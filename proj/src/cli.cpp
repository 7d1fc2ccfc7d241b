#include "nashlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "nashlab/families.hpp"
#include "nashlab/nash.hpp"

namespace nashlab::cli {

using nlohmann::json;

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t stop = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Integer parse_entry(const json& x) {
  if (x.is_number_integer()) {
    if (x.is_number_unsigned()) return Integer(std::to_string(x.get<std::uint64_t>()));
    return Integer(std::to_string(x.get<std::int64_t>()));
  }
  if (x.is_string()) {
    const auto& s = x.get_ref<const std::string&>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw InputError("not an integer: \"" + s + "\"");
    return v;
  }
  throw InputError("generator entries must be integers, got " + x.dump());
}

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

std::size_t default_jobs() {
  if (const char* env = std::getenv("NASHLAB_JOBS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw InputError("NASHLAB_JOBS must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count());
}

const char* fill_color(Verdict v) {
  switch (v) {
    case Verdict::Smooth: return "green";
    case Verdict::Cycle: return "red";
    case Verdict::DepthLimit: return "gray";
    case Verdict::Expanded: return "white";
  }
  return "white";
}

std::string coords(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// Flags shared by `nash` and `sweep`.
struct RunFlags {
  unsigned long characteristic = 0;
  bool normalized = false;
  std::optional<std::size_t> max_depth;  // unset = rank-dependent default
  std::size_t max_nodes = RunConfig{}.max_nodes;
  std::string cycle_scope = "all";
  std::size_t jobs = 0;  // 0 = NASHLAB_JOBS or hardware threads
  bool pretty = false;

  void attach(CLI::App* app) {
    app->add_option("--char", characteristic, "Field characteristic: 0 or a prime");
    app->add_flag("--normalized", normalized, "Normalize after each blowup");
    app->add_option("--max-depth", max_depth, "Depth limit (default 25 up to rank 3, else 10)");
    app->add_option("--max-nodes", max_nodes, "Node budget for the whole tree");
    app->add_option("--cycle-scope", cycle_scope, "Cycle search scope")
        ->check(CLI::IsMember({"ancestors", "all"}));
    app->add_option("--jobs", jobs, "Worker threads (default: NASHLAB_JOBS)");
    app->add_flag("--pretty", pretty, "Indented JSON");
  }

  RunConfig config(std::size_t rank) const {
    RunConfig c{Characteristic(characteristic)};
    c.normalized = normalized;
    c.max_depth = max_depth ? *max_depth : default_max_depth(rank);
    c.max_nodes = max_nodes;
    c.cycle_scope = cycle_scope == "ancestors" ? CycleScope::AncestorsOnly : CycleScope::AllVisited;
    c.jobs = jobs ? jobs : default_jobs();
    if (c.max_nodes == 0) throw InputError("--max-nodes must be at least 1");
    return c;
  }
};

std::size_t max_depth_reached(const IterationTree& t) {
  std::size_t d = 0;
  for (const auto& n : t.nodes) d = std::max(d, n.depth);
  return d;
}

// ---- sweep families ----

struct Instance {
  std::vector<long> params;
  AffineSemigroup semigroup;
};

bool minimal_numerical(const std::vector<long>& gens) {
  std::vector<Integer> g(gens.begin(), gens.end());
  const auto mins = minimal_generators(numerical(g));
  if (mins.size() != gens.size()) return false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (mins[i] != LatticeVector{Integer(gens[i])}) return false;
  return true;
}

void subsets(long lo, long hi, std::size_t k, std::vector<long>& cur,
             std::vector<std::vector<long>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (long x = cur.empty() ? lo : cur.back() + 1; x <= hi; ++x) {
    cur.push_back(x);
    subsets(lo, hi, k, cur, out);
    cur.pop_back();
  }
}

std::vector<Instance> family_instances(const std::string& family, long lo, long hi,
                                       std::size_t size) {
  if (lo > hi) throw InputError("empty range: --min exceeds --max");
  std::vector<Instance> out;
  if (family == "cyclic_quotient") {
    if (lo < 2) throw InputError("cyclic_quotient sweeps need --min >= 2");
    for (long b = lo; b <= hi; ++b)
      for (long a = 1; a < b; ++a)
        if (std::gcd(a, b) == 1) out.push_back({{a, b}, cyclic_quotient(a, b)});
  } else if (family == "rebassoo") {
    if (lo < 1) throw InputError("rebassoo sweeps need --min >= 1");
    for (long p = lo; p <= hi; ++p)
      for (long q = lo; q <= hi; ++q)
        for (long r = lo; r <= hi; ++r)
          if (std::gcd(std::gcd(p, q), r) == 1) out.push_back({{p, q, r}, rebassoo(p, q, r)});
  } else if (family == "reeve") {
    if (lo < 1) throw InputError("reeve sweeps need --min >= 1");
    for (long q = lo; q <= hi; ++q) out.push_back({{q}, reeve(q)});
  } else if (family == "numerical") {
    if (lo < 2) throw InputError("numerical sweeps need --min >= 2");
    if (size < 1) throw InputError("--size must be at least 1");
    std::vector<std::vector<long>> sets;
    std::vector<long> cur;
    subsets(lo, hi, size, cur, sets);
    for (const auto& s : sets) {
      long g = 0;
      for (long x : s) g = std::gcd(g, x);
      if (g != 1 || !minimal_numerical(s)) continue;
      out.push_back({s, numerical(std::vector<Integer>(s.begin(), s.end()))});
    }
  } else {
    throw InputError("unknown family '" + family +
                     "' (expected cyclic_quotient, rebassoo, reeve or numerical)");
  }
  return out;
}

std::string join(const std::vector<long>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// ---- subcommand bodies ----

int cmd_nash(const std::string& input, const RunFlags& flags, bool full_tree,
             const std::string& dot_path, std::istream& in, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto root = canonicalize(load_input(input, in).generators());
  const auto tree = run(root, flags.config(root.rank()));
  json report = run_report(tree, full_tree);
  report["command"] = "nash";
  report["input"] = input;
  report["timing_ms"] = elapsed_ms(start);
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    if (!f) throw InputError("cannot write " + dot_path);
    f << to_dot(tree);
  }
  out << dump(report, flags.pretty) << "\n";
  return exit_code(verdict_summary(tree));
}

int cmd_describe(const std::string& input, bool saturate_flag, bool pretty, std::istream& in,
                 std::ostream& out) {
  const auto raw = load_input(input, in);
  const auto s = canonicalize(raw.generators());
  json j;
  j["schema"] = kSchema;
  j["command"] = "describe";
  j["input"] = to_json(raw);
  j["rank"] = s.rank();
  j["generators"] = to_json(s)["generators"];
  j["pointed"] = s.is_pointed();
  j["smooth"] = is_smooth(s);
  j["unit_rank"] = unit_quotient(s).unit_rank;
  if (s.is_pointed()) {
    json mins = json::array();
    for (const auto& g : minimal_generators(s)) mins.push_back(to_json(g));
    j["minimal_generators"] = mins;
    j["invariant_key"] = invariant_key(s);
  } else {
    j["minimal_generators"] = nullptr;
  }
  if (saturate_flag) {
    json hb = json::array();
    for (const auto& g : saturate(raw.generators()).elements) hb.push_back(to_json(g));
    j["hilbert_basis"] = hb;
  }
  out << dump(j, pretty) << "\n";
  return 0;
}

int cmd_sweep(const std::string& family, long lo, long hi, std::size_t size,
              const RunFlags& flags, const std::string& format, const std::string& output,
              std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto instances = family_instances(family, lo, hi, size);
  json rows = json::array();
  std::ostringstream csv;
  csv << "schema,family,params,verdict,depth,nodes\n";
  for (const auto& inst : instances) {
    const auto tree = run(inst.semigroup, flags.config(inst.semigroup.rank()));
    const auto verdict = to_string(verdict_summary(tree));
    json row;
    row["params"] = inst.params;
    row["verdict"] = verdict;
    row["depth"] = max_depth_reached(tree);
    row["nodes"] = tree.nodes.size();
    rows.push_back(row);
    csv << kSchema << "," << family << "," << join(inst.params, ';') << "," << verdict << ","
        << max_depth_reached(tree) << "," << tree.nodes.size() << "\n";
  }
  std::string text;
  if (format == "csv") {
    text = csv.str();
  } else {
    json j;
    j["schema"] = kSchema;
    j["command"] = "sweep";
    j["family"] = family;
    const auto cfg = flags.config(instances.empty() ? 1 : instances[0].semigroup.rank());
    j["config"] = {{"characteristic", cfg.characteristic.value()},
                   {"normalized", cfg.normalized},
                   {"max_depth", flags.max_depth ? json(*flags.max_depth) : json("default")},
                   {"max_nodes", cfg.max_nodes},
                   {"cycle_scope", to_string(cfg.cycle_scope)}};
    j["rows"] = rows;
    j["timing_ms"] = elapsed_ms(start);
    text = dump(j, flags.pretty) + "\n";
  }
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) throw InputError("cannot write " + output);
    f << text;
  }
  return 0;
}

}  // namespace

AffineSemigroup parse_semigroup(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at " + line_column(text, e.byte));
  }
  if (!j.is_object() || !j.contains("rank") || !j.contains("generators"))
    throw InputError("expected an object with \"rank\" and \"generators\"");
  if (!j["rank"].is_number_unsigned()) throw InputError("\"rank\" must be a nonnegative integer");
  const auto d = j["rank"].get<std::size_t>();
  if (!j["generators"].is_array()) throw InputError("\"generators\" must be an array");
  std::vector<LatticeVector> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_array() || g.size() != d)
      throw InputError("each generator must be an array of " + std::to_string(d) + " integers");
    LatticeVector v;
    for (const auto& x : g) v.push_back(parse_entry(x));
    gens.push_back(std::move(v));
  }
  if (gens.empty()) throw InputError("\"generators\" is empty");
  return AffineSemigroup(d, std::move(gens));
}

AffineSemigroup load_input(const std::string& spec, std::istream& in) {
  if (spec.rfind("example:", 0) == 0) {
    try {
      return preset(spec.substr(8));
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }
  if (spec == "-") return parse_semigroup(read_stream(in));
  if (!spec.empty() && spec.front() == '{') return parse_semigroup(spec);
  std::ifstream f(spec);
  if (!f) throw InputError("cannot open " + spec);
  return parse_semigroup(read_stream(f));
}

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const AffineSemigroup& s) {
  json gens = json::array();
  for (const auto& g : s.generators()) gens.push_back(to_json(g));
  return {{"rank", s.rank()}, {"generators", gens}};
}

json run_report(const IterationTree& tree, bool full_tree) {
  const auto& cfg = tree.config;
  json j;
  j["schema"] = kSchema;
  j["config"] = {{"characteristic", cfg.characteristic.value()},
                 {"normalized", cfg.normalized},
                 {"max_depth", cfg.max_depth},
                 {"max_nodes", cfg.max_nodes},
                 {"cycle_scope", to_string(cfg.cycle_scope)}};
  j["root"] = to_json(tree.nodes.at(0).semigroup);
  j["verdict"] = to_string(verdict_summary(tree));

  std::vector<std::size_t> levels;
  std::map<std::string, std::size_t> counts;
  std::size_t repeated = 0;
  json cycles = json::array();
  std::optional<std::size_t> first_cycle;
  for (const auto& n : tree.nodes) {
    if (levels.size() <= n.depth) levels.resize(n.depth + 1, 0);
    ++levels[n.depth];
    ++counts[to_string(n.verdict)];
    if (n.verdict != Verdict::Cycle) continue;
    if (!n.cycle_to_ancestor) {
      ++repeated;
      continue;
    }
    if (!first_cycle || n.depth < *first_cycle) first_cycle = n.depth;
    json u = json::array();
    for (std::size_t r = 0; r < n.certificate->u.rows(); ++r)
      u.push_back(to_json(n.certificate->u.row(r)));
    cycles.push_back({{"node", n.id},
                      {"depth", n.depth},
                      {"target", *n.cycle_target},
                      {"certificate", {{"u", u}, {"bijection", n.certificate->bijection}}}});
  }
  j["stats"] = {{"nodes", tree.nodes.size()},
                {"max_depth_reached", max_depth_reached(tree)},
                {"level_counts", levels},
                {"verdict_counts", counts},
                {"repeated_class", repeated}};
  j["cycles"] = cycles;
  j["first_cycle_depth"] = first_cycle ? json(*first_cycle) : json(nullptr);

  if (full_tree) {
    json nodes = json::array();
    for (const auto& n : tree.nodes) {
      json node = to_json(n.semigroup);
      node["id"] = n.id;
      node["parent"] = n.parent ? json(*n.parent) : json(nullptr);
      node["depth"] = n.depth;
      node["base_exponent"] = to_json(n.base_exponent);
      node["verdict"] = to_string(n.verdict);
      node["children"] = n.children;
      node["cycle_target"] = n.cycle_target ? json(*n.cycle_target) : json(nullptr);
      node["cycle_to_ancestor"] = n.cycle_to_ancestor;
      node["annotation"] = n.annotation;
      nodes.push_back(node);
    }
    j["tree"] = nodes;
  }
  return j;
}

std::string to_dot(const IterationTree& tree) {
  std::ostringstream s;
  s << "// schema: " << kSchema << "\n";
  s << "digraph nashlab {\n";
  s << "  node [shape=box, style=filled, fontname=\"monospace\"];\n";
  for (const auto& n : tree.nodes) {
    s << "  n" << n.id << " [label=\"#" << n.id << " depth " << n.depth << "\\n"
      << to_string(n.verdict) << "\\nrank " << n.semigroup.rank() << ", "
      << n.semigroup.generators().size() << " gens";
    if (!n.annotation.empty()) s << "\\n" << n.annotation;
    s << "\", fillcolor=" << fill_color(n.verdict) << "];\n";
  }
  for (const auto& n : tree.nodes) {
    if (n.parent)
      s << "  n" << *n.parent << " -> n" << n.id << " [label=\"" << coords(n.base_exponent)
        << "\"];\n";
  }
  for (const auto& n : tree.nodes) {
    if (n.verdict == Verdict::Cycle && n.cycle_target)
      s << "  n" << n.id << " -> n" << *n.cycle_target
        << " [style=dashed, color=red, constraint=false];\n";
  }
  s << "}\n";
  return s.str();
}

int exit_code(Summary s) {
  switch (s) {
    case Summary::Resolved: return 0;
    case Summary::CounterexampleCycle: return 2;
    case Summary::Inconclusive: return 3;
  }
  return 1;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Nash blowups of affine toric varieties", "nashlab"};
  app.require_subcommand(1);

  auto* nash = app.add_subcommand("nash", "Iterate (normalized) Nash blowups and report");
  std::string nash_input;
  RunFlags nash_flags;
  bool full_tree = false;
  std::string dot_path;
  nash->add_option("input", nash_input, "example:<preset>, JSON text, file path, or -")
      ->required();
  nash_flags.attach(nash);
  nash->add_option("--dot", dot_path, "Write the tree as Graphviz DOT");
  nash->add_flag("--full-tree", full_tree, "Include every node in the report");

  auto* describe = app.add_subcommand("describe", "Describe a semigroup");
  std::string describe_input;
  bool saturate_flag = false, describe_pretty = false;
  describe->add_option("input", describe_input, "example:<preset>, JSON text, file path, or -")
      ->required();
  describe->add_flag("--saturate", saturate_flag, "Include the Hilbert basis of the cone");
  describe->add_flag("--pretty", describe_pretty, "Indented JSON");

  auto* sweep = app.add_subcommand("sweep", "Run a family of instances");
  std::string family, format = "csv", output;
  std::optional<long> lo;
  long hi = 0;
  std::size_t size = 2;
  RunFlags sweep_flags;
  sweep->add_option("family", family, "cyclic_quotient, rebassoo, reeve or numerical")
      ->required();
  sweep->add_option("--min", lo, "Smallest parameter (family default if omitted)");
  sweep->add_option("--max", hi, "Largest parameter")->required();
  sweep->add_option("--size", size, "Generators per numerical semigroup");
  sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--output", output, "Write to a file instead of stdout");
  sweep_flags.attach(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*nash) return cmd_nash(nash_input, nash_flags, full_tree, dot_path, in, out);
    if (*describe) return cmd_describe(describe_input, saturate_flag, describe_pretty, in, out);
    if (*sweep) {
      const long first = lo ? *lo : family == "rebassoo" || family == "reeve" ? 1 : 2;
      return cmd_sweep(family, first, hi, size, sweep_flags, format, output, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace nashlab::cli
