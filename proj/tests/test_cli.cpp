#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "quiverkit/cli.hpp"
#include "quiverkit/error.hpp"
#include "quiverkit/graded.hpp"
#include "quiverkit/io.hpp"

namespace fs = std::filesystem;
using namespace quiverkit;
using io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Fixtures {
 public:
  Fixtures() : dir_(fs::temp_directory_path() / ("quiverkit-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Fixtures() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path dir_;
};

Fixtures& fixtures() {
  static Fixtures f;
  return f;
}

std::string a2_file() {
  return fixtures().write("a2.json", R"({"labels":["x","y","z"],"adj":[[0,1,1],[1,0,1],[1,1,0]]})");
}
std::string arrow_file() { return fixtures().write("arrow.json", R"({"adj":[[0,1],[0,0]]})"); }
std::string cycle_file() {
  return fixtures().write("cycle.json", R"({"adj":[[0,1,0],[0,0,1],[1,0,0]]})");
}
std::string edge_file() { return fixtures().write("edge.json", R"({"adj":[[0,1],[1,0]]})"); }

std::string pi_a1_file() {
  const auto p = preprojective(Quiver({{0, 2}, {2, 0}}));
  return fixtures().write("pi_a1.json", io::to_json(p).dump());
}

}  // namespace

TEST_CASE("spec radius prints the certificate") {
  const auto r = run({"spec", "radius", a2_file()});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["rho"] == 2.0);
  CHECK(j["exactly_two"] == true);
  CHECK(j["char_poly"] == json::array({1, 0, -3, -2}));
  CHECK(r.out.rfind(R"({"rho":2.0,"exactly_two":true,"char_poly":[1,0,-3,-2])", 0) == 0);
}

TEST_CASE("pretzel check on a single arrow") {
  const auto r = run({"pretzel", "check", arrow_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "not a pretzelization\n");
  const auto c = run({"pretzel", "check", cycle_file()});
  CHECK(c.out == "pretzelization, Nakayama automorphism (0 1 2)\n");
  const auto j = run({"pretzel", "check", arrow_file(), "--format", "json"});
  CHECK(json::parse(j.out)["pretzelization"] == false);
}

TEST_CASE("domain errors exit 1") {
  const auto r = run({"ade", "classify", arrow_file()});
  CHECK(r.code == 1);
  CHECK(r.err.find("not a graph") != std::string::npos);
  CHECK(run({"quiver", "opposite", "/nonexistent/q.json"}).code == 1);
  CHECK(run({"sym", "twist", arrow_file(), "--sigma", "(0 1)"}).code == 1);
  CHECK(run({"census", "--max-vertices", "6"}).code == 1);
  CHECK(run({"ade", "make", "D", "3"}).code == 1);
}

TEST_CASE("malformed JSON reports a position") {
  const auto bad = fixtures().write("bad.json", "{\"adj\": [[0, 1], [1 0]]}");
  const auto r = run({"quiver", "is-graph", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("byte") != std::string::npos);
  const auto wrong = fixtures().write("wrong.json", R"({"adj": [[0, "x"]]})");
  CHECK(run({"quiver", "is-graph", wrong}).code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"quiver"}).code == 2);
  CHECK(run({"quiver", "opposite"}).code == 2);
  CHECK(run({"quiver", "opposite", edge_file(), "--bogus"}).code == 2);
  CHECK(run({"quiver", "opposite", edge_file(), "--format", "xml"}).code == 2);
  CHECK(run({"quiver", "is-graph", edge_file(), "--format", "dot"}).code == 2);
  CHECK(run({"mckay"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("quiver subcommands") {
  CHECK(run({"quiver", "opposite", arrow_file()}).out ==
        "{\"labels\":[\"v0\",\"v1\"],\"adj\":[[0,0],[1,0]]}\n");
  CHECK(run({"quiver", "opposite", arrow_file(), "--format", "text"}).out == "v0: 0 0\nv1: 1 0\n");
  CHECK(run({"quiver", "opposite", arrow_file(), "--format", "dot"}).out ==
        "digraph \"Q\" {\n  \"v0\";\n  \"v1\";\n  \"v1\" -> \"v0\";\n}\n");
  const auto u = json::parse(run({"quiver", "union", edge_file(), edge_file()}).out);
  CHECK(u["adj"] == json::parse("[[0,1,0,0],[1,0,0,0],[0,0,0,1],[0,0,1,0]]"));
  CHECK(run({"quiver", "is-graph", edge_file(), "--format", "text"}).out == "true\n");
  CHECK(run({"quiver", "components", edge_file()}).out == "{\"components\":[[0,1]]}\n");
  CHECK(json::parse(run({"quiver", "strong", cycle_file()}).out)["strongly_connected"] == true);
}

TEST_CASE("sym, ade and mckay subcommands") {
  const auto auts = json::parse(run({"sym", "auts", cycle_file()}).out);
  CHECK(auts["automorphisms"] == json::array({"()", "(0 1 2)", "(0 2 1)"}));
  const auto tw = json::parse(run({"sym", "twist", edge_file(), "--sigma", "(0 1)"}).out);
  CHECK(tw["adj"] == json::parse("[[1,0],[0,1]]"));
  CHECK(run({"sym", "nakayama", arrow_file(), "--format", "text"}).out == "none\n");

  CHECK(json::parse(run({"ade", "make", "L", "1"}).out)["adj"] == json::parse("[[1,1],[1,1]]"));
  CHECK(run({"ade", "make", "E6", "--format", "text"}).code == 0);
  CHECK(json::parse(run({"ade", "classify", a2_file()}).out)["name"] == "A-tilde_2");

  const auto cyc = json::parse(run({"mckay", "--cyclic", "4", "1", "-1"}).out);
  CHECK(cyc["adj"] == json::parse("[[0,1,0,1],[1,0,1,0],[0,1,0,1],[1,0,1,0]]"));
  const auto table = run({"mckay", "table", "2", "1", "1"});
  REQUIRE(table.code == 0);
  const auto table_path = fixtures().write("z2.json", table.out);
  CHECK(json::parse(run({"mckay", table_path}).out)["adj"] == json::parse("[[0,2],[2,0]]"));
}

TEST_CASE("alg subcommands") {
  const auto pi = pi_a1_file();
  CHECK(json::parse(run({"alg", "hilbert", pi, "--max-degree", "4"}).out)["dims"] ==
        json::array({2, 4, 6, 8, 10}));
  CHECK(run({"alg", "dim", pi, "--degree", "3", "--format", "text"}).out == "8\n");
  CHECK(json::parse(run({"alg", "gabriel", pi}).out)["adj"] == json::parse("[[0,2],[2,0]]"));
  CHECK(run({"alg", "standard", pi, "--format", "text"}).out == "true\n");
  const auto gk = json::parse(run({"alg", "gk", pi, "--max-degree", "20"}).out);
  CHECK(gk["estimate"].get<double>() == doctest::Approx(2.0481).epsilon(1e-4));
  const auto pres = json::parse(run({"alg", "preprojective", edge_file()}).out);
  CHECK(pres["arrows"].size() == 2);
  CHECK(pres["relations"].size() == 2);
}

TEST_CASE("pretzel subcommands") {
  const auto made = run({"pretzel", "make", edge_file(), "--copies", "1", "--sigma", "(0 1)"});
  CHECK(json::parse(made.out)["adj"] == json::parse("[[1,0],[0,1]]"));
  const auto f = json::parse(run({"pretzel", "factor", cycle_file()}).out);
  CHECK(f["found"] == true);
  CHECK(f["single"]["status"] == "found");
  CHECK(f["single"]["factorization"]["copies"] == 3);
  CHECK(json::parse(run({"pretzel", "ade", a2_file()}).out)["classification"]["name"] ==
        "A-tilde_2");
  CHECK(json::parse(run({"pretzel", "ade", cycle_file()}).out)["classification"].is_null());
  CHECK(run({"pretzel", "make", arrow_file(), "--copies", "1", "--sigma", "()"}).code == 1);
}

TEST_CASE("census subcommand") {
  const auto r = json::parse(run({"census", "--max-vertices", "2", "--max-entry", "3"}).out);
  CHECK(r["row_count"] == 3);
  CHECK(r["anomalies"].empty());
  CHECK(r["rows"][0]["classification"] == "L-tilde_0");
}

TEST_CASE("output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"census", "--max-vertices", "3", "--max-entry", "2"},
           {"spec", "radius", a2_file()},
           {"pretzel", "factor", cycle_file()},
           {"alg", "gk", pi_a1_file(), "--max-degree", "10"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("every operation is reachable from exactly one subcommand") {
  const std::set<std::string> operations = {
      "opposite",        "disjoint_union",       "is_graph",        "connected_components",
      "is_strongly_connected", "automorphisms",  "twist",           "find_nakayama",
      "char_poly",       "spectral_radius",      "make_ade",        "classify_ade",
      "mckay_quiver",    "builtin_cyclic_table", "is_pretzelization", "pretzel_factor",
      "pretzelize",      "pretzel_ade_check",    "dim_piece",       "hilbert",
      "gabriel_quiver",  "is_standard",          "gk_estimate",     "preprojective",
      "census"};
  std::map<std::string, int> seen;
  std::set<std::string> commands;
  for (const auto& c : cli::command_table()) {
    ++seen[c.operation];
    CHECK(commands.insert(c.verb + " " + c.subcommand).second);
    std::vector<std::string> args{c.verb};
    if (!c.subcommand.empty()) args.push_back(c.subcommand);
    args.push_back("--help");
    CHECK_MESSAGE(run(args).code == 0, c.verb << " " << c.subcommand);
  }
  CHECK(seen.size() == operations.size());
  for (const auto& op : operations) CHECK_MESSAGE(seen[op] == 1, op);
}

TEST_CASE("standard input via -") {
  const std::string cmd = std::string("echo '{\"adj\":[[0,1],[0,0]]}' | ") + QUIVERKIT_CLI_PATH +
                          " quiver opposite - --format text";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[256];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  CHECK(pclose(pipe) == 0);
  CHECK(out == "v0: 0 0\nv1: 1 0\n");
}
