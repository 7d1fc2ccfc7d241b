#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nashlab/cli.hpp"

using namespace nashlab;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

json parsed(const Result& r) { return json::parse(r.out); }

std::string without_timing(const std::string& text) {
  auto j = json::parse(text);
  j.erase("timing_ms");
  return j.dump();
}

const std::map<std::string, int> kExit{
    {"Resolved", 0}, {"CounterexampleCycle", 2}, {"Inconclusive", 3}};

// Rebuilds the verdict structure of a full-tree report.
IterationTree tree_from_report(const json& j) {
  IterationTree t;
  for (const auto& n : j.at("tree")) {
    IterationNode node;
    node.id = n.at("id");
    if (!n.at("parent").is_null()) node.parent = n.at("parent").get<std::size_t>();
    node.depth = n.at("depth");
    node.children = n.at("children").get<std::vector<std::size_t>>();
    if (!n.at("cycle_target").is_null()) node.cycle_target = n.at("cycle_target").get<std::size_t>();
    node.cycle_to_ancestor = n.at("cycle_to_ancestor");
    const std::string v = n.at("verdict");
    node.verdict = v == "Smooth"   ? Verdict::Smooth
                   : v == "Cycle"  ? Verdict::Cycle
                   : v == "Expanded" ? Verdict::Expanded
                                     : Verdict::DepthLimit;
    t.nodes.push_back(node);
  }
  return t;
}

}  // namespace

TEST(CliNash, SpecExamples) {
  auto cdll = call({"nash", "example:cdll", "--char", "0", "--max-depth", "4"});
  EXPECT_EQ(cdll.code, 2);
  auto j = parsed(cdll);
  EXPECT_EQ(j["verdict"], "CounterexampleCycle");
  EXPECT_EQ(j["first_cycle_depth"], 1);
  EXPECT_EQ(j["schema"], "nashlab/1");

  auto nobile = call({"nash", "example:nobile", "--char", "2"});
  EXPECT_EQ(nobile.code, 2);
  EXPECT_EQ(parsed(nobile)["stats"]["level_counts"], json({1, 1}));

  auto a1 = call({"nash", "example:a1", "--char", "0", "--normalized"});
  EXPECT_EQ(a1.code, 0);
  EXPECT_EQ(parsed(a1)["stats"]["max_depth_reached"], 1);
  EXPECT_EQ(parsed(a1)["verdict"], "Resolved");
}

TEST(CliNash, InputErrors) {
  EXPECT_EQ(call({"nash", "example:nobile", "--char", "4"}).code, 1);
  EXPECT_EQ(call({"nash", "example:nobile", "--char", "-1"}).code, 1);
  EXPECT_EQ(call({"nash", "example:nope"}).code, 1);
  EXPECT_EQ(call({"nash", "example:nobile", "--cycle-scope", "some"}).code, 1);
  EXPECT_EQ(call({"nash", "example:nobile", "--max-depth", "0"}).code, 1);
  EXPECT_EQ(call({"nash", "example:nobile", "--max-nodes", "0"}).code, 1);
  EXPECT_EQ(call({"nash", "/nonexistent/input.json"}).code, 1);
  EXPECT_EQ(call({"nash"}).code, 1);
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"frobnicate"}).code, 1);

  auto bad = call({"nash", "-"}, "{\"rank\": 2,\n \"generators\": [[1,0],\n [1,2]\n");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("line 4, column 1"), std::string::npos) << bad.err;

  EXPECT_EQ(call({"nash", R"({"rank": 2, "generators": [[1, 0], [1]]})"}).code, 1);
  EXPECT_EQ(call({"nash", R"({"rank": 2, "generators": []})"}).code, 1);
  EXPECT_EQ(call({"nash", R"({"generators": [[1]]})"}).code, 1);
  EXPECT_EQ(call({"nash", R"({"rank": 1, "generators": [[1.5]]})"}).code, 1);
  // A line is not pointed.
  EXPECT_EQ(call({"nash", R"({"rank": 1, "generators": [[1], [-1]]})"}).code, 1);
}

TEST(CliNash, InputForms) {
  const std::string text = R"({"rank": 1, "generators": [[2], ["3"]]})";
  auto inline_run = call({"nash", text, "--char", "2"});
  auto stdin_run = call({"nash", "-", "--char", "2"}, text);
  const auto path = std::filesystem::temp_directory_path() / "nashlab_cli_input.json";
  std::ofstream(path) << text;
  auto file_run = call({"nash", path.string(), "--char", "2"});
  std::filesystem::remove(path);
  for (const auto* r : {&inline_run, &stdin_run, &file_run}) {
    EXPECT_EQ(r->code, 2);
    EXPECT_EQ(parsed(*r)["root"], parsed(call({"nash", "example:nobile", "--char", "2"}))["root"]);
  }
  // Raw input is canonicalized: Z{2,4} in Z is the smooth N.
  EXPECT_EQ(call({"nash", R"({"rank": 1, "generators": [[2], [4]]})"}).code, 0);
}

TEST(CliNash, Deterministic) {
  for (std::vector<std::string> base :
       {std::vector<std::string>{"nash", "example:cdll", "--max-depth", "1", "--full-tree"},
        {"nash", "example:reeve:3", "--max-depth", "3", "--full-tree"},
        {"nash", "example:cyclic:5,13", "--full-tree"}}) {
    auto one = base;
    one.insert(one.end(), {"--jobs", "1"});
    auto four = base;
    four.insert(four.end(), {"--jobs", "4"});
    const auto a = without_timing(call(one).out);
    EXPECT_EQ(a, without_timing(call(one).out));
    EXPECT_EQ(a, without_timing(call(four).out));
  }
}

TEST(CliNash, FullTreeMatchesVerdict) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"nash", "example:cdll", "--max-depth", "1", "--full-tree"},
        {"nash", "example:nobile", "--char", "2", "--full-tree"},
        {"nash", "example:cyclic:3,7", "--normalized", "--full-tree"},
        {"nash", "example:reeve:2", "--max-depth", "2", "--full-tree"}}) {
    auto r = call(args);
    auto j = parsed(r);
    ASSERT_EQ(j["tree"].size(), j["stats"]["nodes"].get<std::size_t>());
    const auto summary = to_string(verdict_summary(tree_from_report(j)));
    EXPECT_EQ(summary, j["verdict"]);
    EXPECT_EQ(r.code, kExit.at(summary));
  }
}

TEST(CliNash, ExitCodesMatchVerdictsOnPresets) {
  for (const std::string name : {"nobile", "a1", "rebassoo:1,1,2", "rebassoo:2,3,4", "reeve:2",
                                 "cyclic:2,5", "numerical:3,5", "cdll"}) {
    for (const std::string p : {"0", "2", "3"}) {
      for (bool normalized : {false, true}) {
        const std::string depth = name == "cdll" ? "1" : "3";
        std::vector<std::string> args{"nash", "example:" + name, "--char", p, "--max-depth", depth};
        if (normalized) args.push_back("--normalized");
        auto r = call(args);
        ASSERT_NE(r.code, 1) << r.err;
        EXPECT_EQ(r.code, kExit.at(parsed(r)["verdict"])) << name << " char " << p;
      }
    }
  }
}

TEST(CliNash, JobsEnvironmentDefault) {
  ::setenv("NASHLAB_JOBS", "bogus", 1);
  EXPECT_EQ(call({"nash", "example:nobile"}).code, 1);
  ::setenv("NASHLAB_JOBS", "3", 1);
  EXPECT_EQ(call({"nash", "example:nobile"}).code, 0);
  ::unsetenv("NASHLAB_JOBS");
}

TEST(CliNash, DotGolden) {
  const auto path = std::filesystem::temp_directory_path() / "nashlab_cli_nobile.dot";
  ASSERT_EQ(call({"nash", "example:nobile", "--char", "2", "--dot", path.string()}).code, 2);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::filesystem::remove(path);
  EXPECT_EQ(ss.str(),
            "// schema: nashlab/1\n"
            "digraph nashlab {\n"
            "  node [shape=box, style=filled, fontname=\"monospace\"];\n"
            "  n0 [label=\"#0 depth 0\\nExpanded\\nrank 1, 2 gens\", fillcolor=white];\n"
            "  n1 [label=\"#1 depth 1\\nCycle\\nrank 1, 2 gens\", fillcolor=red];\n"
            "  n0 -> n1 [label=\"(3)\"];\n"
            "  n1 -> n0 [style=dashed, color=red, constraint=false];\n"
            "}\n");
}

TEST(CliNash, DotColors) {
  const auto path = std::filesystem::temp_directory_path() / "nashlab_cli_colors.dot";
  call({"nash", "example:numerical:5,7", "--max-depth", "1", "--dot", path.string()});
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::filesystem::remove(path);
  EXPECT_NE(ss.str().find("fillcolor=gray"), std::string::npos);
  auto a1 = std::filesystem::temp_directory_path() / "nashlab_cli_a1.dot";
  call({"nash", "example:a1", "--normalized", "--dot", a1.string()});
  std::ifstream g(a1);
  std::stringstream tt;
  tt << g.rdbuf();
  std::filesystem::remove(a1);
  EXPECT_NE(tt.str().find("fillcolor=green"), std::string::npos);
}

TEST(CliDescribe, Examples) {
  auto cusp = parsed(call({"describe", "example:nobile"}));
  EXPECT_EQ(cusp["smooth"], false);
  EXPECT_EQ(cusp["pointed"], true);
  EXPECT_EQ(cusp["schema"], "nashlab/1");

  auto plane = parsed(call({"describe", R"({"rank": 2, "generators": [[1, 0], [0, 1]]})"}));
  EXPECT_EQ(plane["smooth"], true);
  EXPECT_FALSE(plane.contains("hilbert_basis"));

  auto a1 = parsed(call({"describe", R"({"rank": 2, "generators": [[1, 0], [1, 1], [1, 2]]})",
                         "--saturate"}));
  EXPECT_EQ(a1["hilbert_basis"].size(), 3u);
  EXPECT_EQ(a1["minimal_generators"].size(), 3u);

  auto line = parsed(call({"describe", R"({"rank": 1, "generators": [[1], [-1]]})"}));
  EXPECT_EQ(line["pointed"], false);
  EXPECT_EQ(line["unit_rank"], 1);
  EXPECT_TRUE(line["minimal_generators"].is_null());
}

TEST(CliSweep, CyclicQuotientsResolve) {
  for (const std::string p : {"0", "2"}) {
    auto r = call({"sweep", "cyclic_quotient", "--max", "12", "--char", p, "--normalized",
                   "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = parsed(r);
    EXPECT_EQ(j["rows"].size(), 45u);  // coprime 1 <= a < b <= 12
    for (const auto& row : j["rows"]) EXPECT_EQ(row["verdict"], "Resolved") << row.dump();
  }
}

TEST(CliSweep, CsvAndOrdering) {
  auto r = call({"sweep", "reeve", "--max", "2", "--max-depth", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, first, second, extra;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(header, "schema,family,params,verdict,depth,nodes");
  EXPECT_EQ(first.rfind("nashlab/1,reeve,1,Resolved,0,1", 0), 0u) << first;
  EXPECT_EQ(second.rfind("nashlab/1,reeve,2,", 0), 0u) << second;
  EXPECT_FALSE(std::getline(lines, extra));
  EXPECT_EQ(r.out, call({"sweep", "reeve", "--max", "2", "--max-depth", "3"}).out);

  auto num = parsed(call({"sweep", "numerical", "--max", "6", "--format", "json"}));
  std::vector<std::vector<long>> params;
  for (const auto& row : num["rows"]) params.push_back(row["params"]);
  EXPECT_EQ(params, (std::vector<std::vector<long>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 6}}));
}

TEST(CliSweep, InvalidRanges) {
  EXPECT_EQ(call({"sweep", "cyclic_quotient", "--min", "5", "--max", "3"}).code, 1);
  EXPECT_EQ(call({"sweep", "cyclic_quotient", "--min", "0", "--max", "3"}).code, 1);
  EXPECT_EQ(call({"sweep", "reeve", "--min", "0", "--max", "3"}).code, 1);
  EXPECT_EQ(call({"sweep", "numerical", "--min", "1", "--max", "3"}).code, 1);
  EXPECT_EQ(call({"sweep", "numerical", "--max", "3", "--size", "0"}).code, 1);
  EXPECT_EQ(call({"sweep", "tori", "--max", "3"}).code, 1);
  EXPECT_EQ(call({"sweep", "reeve"}).code, 1);
  EXPECT_EQ(call({"sweep", "reeve", "--max", "2", "--format", "xml"}).code, 1);
}
