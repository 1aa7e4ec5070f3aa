#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fbp/cli.hpp"
#include "fbp/graph/kronecker.hpp"
#include "fbp/graph/matrix_io.hpp"

using namespace fbp;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "fbp_test_cli";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("bpf values") {
  Run r = run({"bpf", "domino"});
  CHECK(r.code == kExitOk);
  CHECK(first_line(r.out) == "5/2 = 2.500000");

  r = run({"bpf", "domino", "--power", "2"});
  CHECK(r.code == kExitOk);
  CHECK(first_line(r.out) == "6");
  CHECK(r.out.find("2.449490") != std::string::npos);

  r = run({"bpf", "domino", "--init", "stars", "--lp", "exact", "--threads", "2"});
  CHECK(r.code == kExitOk);
  CHECK(first_line(r.out) == "5/2 = 2.500000");
}

TEST_CASE("bpf json schema") {
  const Run r = run({"bpf", "domino", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["kind"] == "bpf");
  CHECK(doc["value"]["num"] == "5");
  CHECK(doc["value"]["den"] == "2");
  CHECK(doc["decimal"] == "2.500000");
  CHECK(doc["converged"] == true);
  CHECK(doc["iterations"] == 1);
  CHECK(doc["matrix_hash"] == matrix_hash(BinaryMatrix::domino()));
  CHECK(doc["lower_bound"]["num"] == "5");
  CHECK(doc.contains("timings"));
  REQUIRE(doc["support"].size() == 5);
  for (const auto& s : doc["support"]) {
    CHECK(s["weight"]["num"] == "1");
    CHECK(s["weight"]["den"] == "2");
    CHECK(s.contains("rows"));
    CHECK(s.contains("cols"));
  }
}

TEST_CASE("bpf csv and --out") {
  const auto path = temp_path("bpf.csv");
  const Run r = run({"bpf", "domino", "--format", "csv", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header.find("value_num") != std::string::npos);
  CHECK(row.find("5,2") != std::string::npos);
}

TEST_CASE("nonconverged runs exit 2 with bounds") {
  const Run r = run({"bpf", "domino", "--power", "2", "--init", "stars", "--max-iters", "1"});
  CHECK(r.code == kExitNonconverged);
  CHECK(r.out.find("lower bound") != std::string::npos);
}

TEST_CASE("cover and integer commands") {
  CHECK(first_line(run({"bcf", "crown5"}).out) == "10/3 = 3.333333");
  CHECK(first_line(run({"bcf", "domino"}).out) == "2");
  CHECK(first_line(run({"bc", "domino"}).out) == "2");
  CHECK(first_line(run({"bp", "domino"}).out) == "3");
  const Run capped = run({"bp", "crown5", "--node-cap", "1"});
  CHECK(capped.code == kExitCapRefused);
  CHECK_FALSE(capped.err.empty());
  CHECK(run({"bp", "domino", "--power", "3", "--biclique-cap", "10"}).code == kExitCapRefused);
}

TEST_CASE("bounds tables") {
  Run r = run({"bounds", "domino", "--kmax", "5"});
  CHECK(r.code == kExitOk);
  for (const char* v : {"2.500000", "2.236068", "2.154435", "2.114743", "2.091279"}) {
    CHECK(r.out.find(v) != std::string::npos);
  }
  CHECK(r.out.find("interval: [2, 2.500000]") != std::string::npos);

  r = run({"bounds", "domino", "--kmax", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("interval: [2, 2.500000]") != std::string::npos);

  const auto values = temp_path("upper.txt");
  std::ofstream(values) << "# bp_f of D^k\n2 6\n3 13.818792\n4 32.040389\n5 75.201302\n";
  r = run({"bounds", "domino", "--upper-values", values.string(), "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["interval"][0] == "2");
  CHECK(doc["interval"][1] == "2.372713");
  CHECK(doc["rows"].size() == 5);
  CHECK(doc["rows"][4]["upper"] == "2.372712");
  CHECK(doc["fooling_set"] == 2);

  r = run({"bounds", "domino", "--compute", "2", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("2,2.236068,6,1,2.449490,2.449490") != std::string::npos);
}

TEST_CASE("kron output") {
  Run r = run({"kron", "domino", "--power", "2"});
  CHECK(r.code == kExitOk);
  const BinaryMatrix d2 = parse_matrix(r.out);
  CHECK(d2.num_rows() == 9);
  CHECK(d2.num_edges() == 49);

  const auto path = temp_path("d.txt");
  std::ofstream(path) << "110\n111\n011\n";
  r = run({"kron", path.string(), "--power", "1"});
  CHECK(r.out == "110\n111\n011\n");

  r = run({"kron", "domino", "--power", "3"});
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.size() == 27);
    ++count;
  }
  CHECK(count == 27);
}

TEST_CASE("checkpoint resume from the command line") {
  const auto cp = temp_path("cp.json");
  const Run full = run({"bpf", "domino", "--power", "2", "--init", "stars", "--format", "json"});
  REQUIRE(full.code == kExitOk);
  const Run head = run({"bpf", "domino", "--power", "2", "--init", "stars", "--checkpoint", cp.string(),
                        "--max-iters", "2"});
  CHECK(head.code == kExitNonconverged);
  const Run tail = run({"bpf", "domino", "--power", "2", "--init", "stars", "--checkpoint", cp.string(),
                        "--format", "json"});
  REQUIRE(tail.code == kExitOk);
  const auto a = nlohmann::json::parse(full.out);
  const auto b = nlohmann::json::parse(tail.out);
  CHECK(a["value"] == b["value"]);
  CHECK(a["iterations"] == b["iterations"]);
  CHECK(b["resumed"] == true);

  // The same checkpoint refuses another matrix.
  CHECK(run({"bpf", "crown5", "--checkpoint", cp.string()}).code == kExitCheckpoint);
}

TEST_CASE("errors and exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"bpf"}).code == kExitUsage);
  CHECK(run({"bpf", "domino", "--format", "yaml"}).code == kExitUsage);
  CHECK(run({"bpf", "domino", "--epsilon", "0"}).code == kExitUsage);
  CHECK(run({"bpf", "domino", "--epsilon", "abc"}).code == kExitFormat);
  CHECK(run({"bpf", "/nonexistent/matrix"}).code == kExitFormat);
  const auto bad = temp_path("bad.txt");
  std::ofstream(bad) << "101\n11\n";
  CHECK(run({"bpf", bad.string()}).code == kExitFormat);
  const auto empty = temp_path("empty.txt");
  std::ofstream(empty) << "000\n000\n";
  CHECK(run({"bpf", empty.string()}).code == kExitFormat);
  const auto junk = temp_path("junk.json");
  std::ofstream(junk) << "[]";
  CHECK(run({"bpf", "domino", "--checkpoint", junk.string()}).code == kExitCheckpoint);
  const Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("bpf") != std::string::npos);
}
