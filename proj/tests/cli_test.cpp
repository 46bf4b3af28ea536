#include <doctest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "dspath/cli.hpp"
#include "dspath/error.hpp"
#include "dspath/evidence_file.hpp"
#include "dspath/ranking.hpp"
#include "dspath/support.hpp"
#include "dspath/verify.hpp"
#include "helpers.hpp"

using namespace dspath;
using namespace dspath::testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dspath");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("dspath_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

std::string error_of(std::string_view text) {
  try {
    (void)parse_evidence(text, "g.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("loading evidence files") {
  const EvidenceFile two = parse_evidence(
      R"({"vertices":[{"id":1,"p":0.8,"label":"obs-A"},{"id":2,"p":0.6}],"edges":[{"from":1,"to":2,"q":0.3}]})");
  CHECK(two.graph.size() == 2);
  CHECK(two.graph.p(0) == 0.8);
  CHECK(two.graph.q(0, 1) == 0.3);
  CHECK(two.warnings.empty());
  CHECK(two.labels[0] == "obs-A");
  CHECK_FALSE(two.labels[1].has_value());

  const EvidenceFile missing = parse_evidence(
      R"({"vertices":[{"id":1,"p":0.5},{"id":2,"p":0.5},{"id":3,"p":0.5}],
          "edges":[{"from":1,"to":2,"q":0.1},{"from":2,"to":3,"q":0.2}]})");
  REQUIRE(missing.warnings.size() == 1);
  CHECK(missing.warnings[0].find("(1,3)") != std::string::npos);
  CHECK(missing.graph.q(0, 2) == 0.0);

  CHECK(error_of(R"({"vertices":[{"id":1,"p":0.5},{"id":3,"p":0.5}],"edges":[]})").find("non-consecutive ids") !=
        std::string::npos);
  CHECK(error_of(R"({"vertices":[{"id":1,"p":1.5}],"edges":[]})").find("vertices[0].p") != std::string::npos);
  CHECK(error_of(R"({"vertices":[{"id":1,"p":0.5},{"id":2,"p":0.5}],"edges":[{"from":2,"to":1,"q":0.1}]})")
            .find("edges[0]") != std::string::npos);
  CHECK(error_of(R"({"vertices":[{"id":1,"p":0.5},{"id":2,"p":0.5}],
                     "edges":[{"from":1,"to":2,"q":0.1},{"from":1,"to":2,"q":0.2}]})")
            .find("duplicate edge (1,2)") != std::string::npos);
  CHECK(error_of(R"({"vertices":[{"id":1,"p":0.5}],"edges":[{"from":1,"to":7,"q":0.1}]})").find("edges[0]") !=
        std::string::npos);
  CHECK(error_of(R"({"vertices":[]})").find("g.json") != std::string::npos);

  const std::string malformed = error_of("{\"vertices\": [\n  {\"id\": 1,, }\n]}");
  CHECK(malformed.find("g.json") != std::string::npos);
  CHECK(malformed.find("line 2") != std::string::npos);

  CHECK_THROWS_AS(load_evidence("/nonexistent/dspath.json"), InputError);
}

TEST_CASE("emit and load round-trip") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const EvidenceGraph g = random_graph(n, rng, 0.0, 1.0);
    std::vector<std::optional<std::string>> labels(n);
    for (std::size_t i = 0; i < n; i += 2) labels[i] = "obs-" + std::to_string(i);
    const std::string text = emit_evidence(g, labels);
    const EvidenceFile back = parse_evidence(text);
    CHECK(back.graph == g);
    CHECK(back.labels == labels);
    CHECK(back.warnings.empty());
    CHECK(emit_evidence(back.graph, back.labels) == text);

    TempFile file(text);
    CHECK(load_evidence(file.str()).graph == g);
  }
}

TEST_CASE("query command") {
  std::mt19937_64 rng(223);
  const EvidenceGraph g = random_graph(3, rng);
  TempFile file(emit_evidence(g));

  const Run r = run({"query", file.str(), "--path", "101", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const json doc = json::parse(r.out);
  const double scale = 1.0 / (1.0 - closed_k3(g));
  CHECK(std::abs(doc["conflict"].get<double>() - closed_k3(g)) <= 1e-12);
  const json& path = doc["paths"][0];
  CHECK(path["path"] == "101");
  CHECK(std::abs(path["support"].get<double>() - scale * closed_spt_101(g)) <= 1e-12);
  CHECK(std::abs(path["plausibility"].get<double>() - scale * closed_pls_101(g)) <= 1e-12);
  CHECK(std::abs(path["support_unnormalized"].get<double>() - closed_spt_101(g)) <= 1e-12);

  const Run table = run({"query", file.str(), "--path", "101"});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("support") != std::string::npos);

  const Run bad = run({"query", file.str(), "--path", "10"});
  CHECK(bad.code == kExitInputError);
  CHECK(bad.err.find("path length mismatch") != std::string::npos);
}

TEST_CASE("rank command") {
  std::mt19937_64 rng(227);
  const EvidenceGraph g = random_graph(5, rng);
  TempFile file(emit_evidence(g));

  const Run full = run({"rank", file.str(), "--format", "json"});
  REQUIRE(full.code == kExitOk);
  const json all = json::parse(full.out);
  REQUIRE(all["paths"].size() == 32);

  const Run top = run({"rank", file.str(), "--top", "4", "--format", "json"});
  REQUIRE(top.code == kExitOk);
  const json best = json::parse(top.out);
  REQUIRE(best["paths"].size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(best["paths"][i] == all["paths"][i]);

  // CSV numbers parse back to the exact doubles.
  const Run csv = run({"rank", file.str(), "--format", "csv"});
  REQUIRE(csv.code == kExitOk);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "path,support,plausibility,support_unnormalized,plausibility_unnormalized,conflict");
  const Ranking ranking = rank_paths(g);
  for (const PathBelief& b : ranking.paths) {
    REQUIRE(std::getline(lines, line));
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    CHECK(cell == b.path.to_string());
    std::getline(cells, cell, ',');
    double value = 0.0;
    std::from_chars(cell.data(), cell.data() + cell.size(), value);
    CHECK(value == b.support);
  }

  CHECK(run({"rank", file.str(), "--top", "0"}).code == kExitInputError);
  CHECK(run({"rank", file.str(), "--format", "xml"}).code == kExitInputError);
  CHECK(run({"rank"}).code == kExitInputError);
}

TEST_CASE("conflict command") {
  const EvidenceGraph g = graph3(0.7, 0.6, 0.5, 0.2, 0.3, 0.4);
  TempFile file(emit_evidence(g));
  const Run r = run({"conflict", file.str(), "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(std::abs(doc["conflict"].get<double>() - closed_k3(g)) <= 1e-12);
  CHECK(doc["pairs"].size() == 3);
}

TEST_CASE("verify command") {
  const Run ok = run({"verify", "--random", "--n", "4", "--trials", "50", "--seed", "7"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("PASS") != std::string::npos);

  const Run broken = run({"verify", "--random", "--n", "4", "--trials", "50", "--seed", "7", "--inject-fault", "1e-6"});
  CHECK(broken.code == kExitVerifyMismatch);
  CHECK(broken.out.find("FAIL") != std::string::npos);

  TempFile file(emit_evidence(graph3(0.7, 0.6, 0.5, 0.2, 0.3, 0.4)));
  CHECK(run({"verify", file.str()}).code == kExitOk);

  const Run too_big = run({"verify", "--random", "--n", "7"});
  CHECK(too_big.code == kExitInputError);
  CHECK(too_big.err.find("cap of 6") != std::string::npos);
  CHECK(run({"verify"}).code == kExitInputError);
}

TEST_CASE("total conflict exits with its own code") {
  TempFile file(R"({"vertices":[{"id":1,"p":1},{"id":2,"p":1}],"edges":[{"from":1,"to":2,"q":1}]})");
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"rank", file.str()}, {"query", file.str(), "--path", "11"}, {"conflict", file.str()}}) {
    const Run r = run(cmd);
    CHECK(r.code == kExitTotalConflict);
    CHECK(r.err.find("total conflict: k = 1") != std::string::npos);
  }
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"rank", "--bogus"}).code == kExitInputError);
  const Run missing = run({"rank", "/nonexistent/dspath.json"});
  CHECK(missing.code == kExitInputError);
  CHECK(missing.err.find("/nonexistent/dspath.json") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("bench command") {
  const Run r = run({"bench", "--n-min", "4", "--n-max", "6", "--min-time", "0.01", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["samples"].size() == 3);
  CHECK(doc["slope"].is_number());
  CHECK(run({"bench", "--n-min", "9", "--n-max", "5"}).code == kExitInputError);
}
