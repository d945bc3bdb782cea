#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rnaposet/cli.hpp"
#include "rnaposet/diagram.hpp"
#include "rnaposet/matrix.hpp"

using namespace rnaposet;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("inspect") {
  const auto r = run({"inspect", "n=9; arcs=(1,4),(5,9),(6,8)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("free sites: 2,3,7") != std::string::npos);
  CHECK(r.out.find("block matrix: [[0,0,1,0],[0,0,0,0],[1,0,0,2],[0,0,2,0]]") != std::string::npos);
  CHECK(r.out.find("tautology: 3") != std::string::npos);
  const auto j = run({"--format", "json", "inspect", "n=9; arcs=(1,4),(5,9),(6,8)"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["tautology"] == 3);
  CHECK(matrix_from_json(doc["block_matrix"]).at(3, 4) == 2);
  CHECK(parse_diagram(doc["diagram"].get<std::string>()) == parse_diagram("n=9; arcs=(1,4),(5,9),(6,8)"));
}

TEST_CASE("diagram verbs print re-parseable diagrams") {
  const auto c = run({"canonicalize", "n=7; arcs=(1,4),(2,6)"});
  CHECK(c.code == 0);
  CHECK(parse_diagram(first_line(c.out)) == Diagram(7, {{1, 6}, {2, 4}}));
  const auto d = run({"dual", "n=5; arcs=(2,4)"});
  CHECK(parse_diagram(first_line(d.out)) == Diagram(6, {{2, 5}}));
  const auto b = run({"blowup", "n=5; arcs=(1,3),(3,5)"});
  CHECK(parse_diagram(first_line(b.out)) == Diagram(6, {{1, 3}, {4, 6}}));
  const auto e = run({"equiv", "n=7; arcs=(1,4),(2,6)", "n=7; arcs=(1,4),(2,6)"});
  CHECK(e.code == 0);
  CHECK(e.out == "equivalent\n");
  CHECK(run({"equiv", "n=7; arcs=(1,4),(2,6)", "n=7; arcs=(1,4),(5,7)"}).out == "not equivalent\n");
}

TEST_CASE("realize from inline JSON and from a file") {
  const auto r = run({"realize", R"({"order":4,"rows":[[0,0,1,0],[0,0,0,0],[1,0,0,2],[0,0,2,0]]})"});
  CHECK(r.code == 0);
  const auto d = parse_diagram(first_line(r.out));
  CHECK(matrix_key(block_matrix(d)) == "[[0,0,1,0],[0,0,0,0],[1,0,0,2],[0,0,2,0]]");
  const auto path = tmp("rnaposet_matrix.json");
  std::ofstream(path) << R"({"rows":[[0,0,1,0],[0,0,0,0],[1,0,0,0],[0,0,0,0]]})";
  CHECK(parse_diagram(first_line(run({"realize", path}).out)) == Diagram(5, {{1, 4}}));
}

TEST_CASE("enum lists re-parseable elements") {
  const auto r = run({"enum", "--family", "S", "--params", "n=5,k=1"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# S_{5,1}: 10 elements");
  int n = 0;
  while (std::getline(in, line)) {
    CHECK(parse_diagram(line).length() == 5);
    ++n;
  }
  CHECK(n == 10);
  const auto m = run({"--format", "json", "enum", "--family", "M", "--params", "m=5,k=2,r=1"});
  const auto doc = nlohmann::json::parse(m.out);
  CHECK(doc["size"] == 239);
  CHECK(matrix_from_json(nlohmann::json::parse(doc["elements"][0].get<std::string>())).order() == 5);
  CHECK(run({"enum", "--family", "P", "--params", "f=4,k=1"}).out.find("10 elements") != std::string::npos);
  CHECK(run({"enum", "--family", "D", "--params", "f=3,k=2,r=1"}).out.find("33 elements") != std::string::npos);
  CHECK(run({"enum", "--family", "Sstar", "--params", "m=6,k=2"}).out.find("63 elements") != std::string::npos);
}

TEST_CASE("poset stats and dot") {
  const auto dot = tmp("rnaposet_hasse.dot");
  const auto r = run({"poset", "--family", "P", "--params", "f=4,k=1,r=0", "--dot", dot, "--stats"});
  CHECK(r.code == 0);
  CHECK(r.out.find("elements: 10") != std::string::npos);
  CHECK(r.out.find("rank_cardinality: 2") != std::string::npos);
  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("digraph hasse {") == 0);
}

TEST_CASE("complex and homology through files") {
  const auto facets = tmp("rnaposet_T62.txt");
  const auto c = run({"complex", "--T", "6", "2", "--facets", facets});
  CHECK(c.code == 0);
  CHECK(c.out.find("3 facets") != std::string::npos);
  const auto h = run({"homology", "--facets", facets});
  CHECK(h.code == 0);
  CHECK(h.out.find("H~_1 = Z") != std::string::npos);
  const auto p = run({"homology", "--family", "P", "--params", "f=5,k=1"});
  CHECK(p.out.find("H~_2 = Z") != std::string::npos);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--check", "thm11", "--grid", "f=4,k=1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("result: PASS") != std::string::npos);
  const auto one = run({"--jobs", "1", "verify", "--check", "theta", "--grid", "m=5..7,k=1;m=6..7,k=2"});
  const auto many = run({"verify", "--check", "theta", "--grid", "m=5..7,k=1;m=6..7,k=2", "--jobs", "3"});
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
  const auto j = run({"--format", "json", "verify", "--check", "tau", "--grid", "n=5,k=1/2"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["passed"] == true);
  CHECK(doc["points"].size() == 2);
  CHECK(doc["points"][0].count("seconds") == 0);
  CHECK(run({"verify", "--check", "tau", "--grid", "n=5,k=1", "--timing"}).out.find(" s]") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto bad = run({"inspect", "n=9; arcs=(1,4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("column") != std::string::npos);
  CHECK(run({"inspect", "n=5; arcs=(1,2)"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--check", "nope"}).code == 2);
  CHECK(run({"verify", "--check", "tau", "--grid", "n=5..3,k=1"}).code == 2);
  CHECK(run({"enum", "--family", "Q", "--params", "n=5"}).code == 2);
  CHECK(run({"enum", "--family", "S", "--params", "n=5"}).code == 2);
  CHECK(run({"realize", "{not json"}).code == 2);
  CHECK(run({"--format", "xml", "inspect", "n=4; arcs="}).code == 2);
  const auto cap = run({"--cap", "50", "complex", "--T", "8", "2"});
  CHECK(cap.code == 3);
  CHECK(cap.err.find("resource limit") != std::string::npos);
  CHECK(run({"--cap", "10", "homology", "--family", "S", "--params", "n=7,k=1"}).code == 3);
}
