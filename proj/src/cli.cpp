#include "dspath/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <charconv>
#include <cstdio>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>

#include "dspath/bench.hpp"
#include "dspath/error.hpp"
#include "dspath/evidence_file.hpp"
#include "dspath/ranking.hpp"
#include "dspath/support.hpp"
#include "dspath/verify.hpp"

namespace dspath {
namespace {

using nlohmann::json;

constexpr double kVerifyTolerance = 1e-9;

// Shortest text that parses back to the same double.
std::string full_precision(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::string fixed6(double x) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6f", x);
  return buf.data();
}

std::string scientific(double x) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3g", x);
  return buf.data();
}

std::string describe_path(const CompletePath& path, const std::vector<std::optional<std::string>>& labels) {
  if (path.empty()) return "(none)";
  std::string out;
  for (std::size_t v : path.vertices()) {
    if (!out.empty()) out += " > ";
    out += (v < labels.size() && labels[v]) ? *labels[v] : "v" + std::to_string(v + 1);
  }
  return out;
}

json path_json(const PathBelief& b) {
  return {{"path", b.path.to_string()},
          {"support", b.support},
          {"plausibility", b.plausibility},
          {"support_unnormalized", b.support_unnormalized},
          {"plausibility_unnormalized", b.plausibility_unnormalized}};
}

void write_paths(std::ostream& out, const std::string& format, double conflict, const std::vector<PathBelief>& paths,
                 const EvidenceFile& file) {
  if (format == "json") {
    json doc{{"conflict", conflict}, {"paths", json::array()}, {"warnings", file.warnings}};
    for (const auto& b : paths) doc["paths"].push_back(path_json(b));
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    out << "path,support,plausibility,support_unnormalized,plausibility_unnormalized,conflict\n";
    for (const auto& b : paths) {
      out << b.path.to_string() << ',' << full_precision(b.support) << ',' << full_precision(b.plausibility) << ','
          << full_precision(b.support_unnormalized) << ',' << full_precision(b.plausibility_unnormalized) << ','
          << full_precision(conflict) << "\n";
    }
    return;
  }
  out << "conflict k = " << fixed6(conflict) << "\n";
  out << "rank  path" << std::string(file.graph.size() > 4 ? file.graph.size() - 4 : 0, ' ')
      << "  support   plausibility  vertices\n";
  std::size_t rank = 1;
  for (const auto& b : paths) {
    std::string r = std::to_string(rank++);
    out << r << std::string(r.size() < 6 ? 6 - r.size() : 1, ' ') << b.path.to_string()
        << std::string(b.path.size() < 4 ? 4 - b.path.size() : 0, ' ') << "  " << fixed6(b.support) << "  "
        << fixed6(b.plausibility) << "      " << describe_path(b.path, file.labels) << "\n";
  }
}

void report_warnings(std::ostream& err, const std::string& format, const EvidenceFile& file) {
  if (format == "json") return;
  for (const auto& w : file.warnings) err << "warning: " << w << "\n";
}

int cmd_rank(const std::string& input, std::optional<std::size_t> top, const std::string& format, std::ostream& out,
             std::ostream& err) {
  const EvidenceFile file = load_evidence(input);
  report_warnings(err, format, file);
  RankOptions options;
  options.top = top;
  const Ranking ranking = rank_paths(file.graph, options);
  write_paths(out, format, ranking.conflict, ranking.paths, file);
  return kExitOk;
}

int cmd_query(const std::string& input, const std::string& bits, const std::string& format, std::ostream& out,
              std::ostream& err) {
  const EvidenceFile file = load_evidence(input);
  report_warnings(err, format, file);
  const CompletePath path = CompletePath::parse(bits);
  if (path.size() != file.graph.size()) {
    throw InputError("path length mismatch: got " + std::to_string(path.size()) + " characters for " +
                     std::to_string(file.graph.size()) + " vertices");
  }
  const ConflictTable table = conflict(file.graph);
  if (table.is_total()) throw TotalConflictError();
  const PathBelief belief = evaluate_path(file.graph, path, table);
  if (format == "table") {
    out << "path                       " << path.to_string() << "  (" << describe_path(path, file.labels) << ")\n"
        << "conflict k                 " << fixed6(table.total) << "\n"
        << "support                    " << fixed6(belief.support) << "\n"
        << "plausibility               " << fixed6(belief.plausibility) << "\n"
        << "support (unnormalized)     " << fixed6(belief.support_unnormalized) << "\n"
        << "plausibility (unnormalized)" << " " << fixed6(belief.plausibility_unnormalized) << "\n";
    return kExitOk;
  }
  write_paths(out, format, table.total, {belief}, file);
  return kExitOk;
}

int cmd_conflict(const std::string& input, const std::string& format, std::ostream& out, std::ostream& err) {
  const EvidenceFile file = load_evidence(input);
  report_warnings(err, format, file);
  const ConflictTable table = conflict(file.graph);
  const std::size_t n = file.graph.size();
  if (format == "json") {
    json doc{{"conflict", table.total}, {"pairs", json::array()}, {"warnings", file.warnings}};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        doc["pairs"].push_back({{"from", i + 1}, {"to", j + 1}, {"k", table.contribution(i, j)}});
      }
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "conflict k = " << fixed6(table.total) << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        out << "  k[" << i + 1 << "," << j + 1 << "] = " << fixed6(table.contribution(i, j)) << "\n";
      }
    }
  }
  if (table.is_total()) {
    err << "total conflict: k = 1\n";
    return kExitTotalConflict;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  bool random = false;
  std::size_t n = 0;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::size_t oracle_cap = kDefaultOracleCap;
  double inject_fault = 0.0;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (args.random == !args.input.empty()) throw InputError("verify takes either a file or --random");
  VerifyOptions options;
  options.oracle.max_vertices = args.oracle_cap;
  options.inject_fault = args.inject_fault;

  Deviation worst;
  std::size_t instances = 0;
  std::size_t n = 0;
  if (args.random) {
    if (args.n == 0) throw InputError("verify --random needs --n");
    if (args.n > args.oracle_cap) {
      throw OracleInfeasibleError("oracle infeasible: n = " + std::to_string(args.n) + " exceeds the cap of " +
                                  std::to_string(args.oracle_cap) + " vertices");
    }
    std::mt19937_64 rng(args.seed);
    n = args.n;
    for (; instances < args.trials; ++instances) worst.absorb(compare_with_oracle(random_graph(n, rng), options));
  } else {
    const EvidenceFile file = load_evidence(args.input);
    n = file.graph.size();
    worst = compare_with_oracle(file.graph, options);
    instances = 1;
  }

  out << "verify: n = " << n << ", " << instances << " instance(s)\n"
      << "  max |d| conflict                   " << scientific(worst.conflict) << "\n"
      << "  max |d| support (unnormalized)     " << scientific(worst.support_unnormalized) << "\n"
      << "  max |d| support                    " << scientific(worst.support) << "\n"
      << "  max |d| plausibility (unnormalized)" << " " << scientific(worst.plausibility_unnormalized) << "\n"
      << "  max |d| plausibility               " << scientific(worst.plausibility) << "\n";
  if (worst.max() <= kVerifyTolerance) {
    out << "PASS, max |Δ| = " << scientific(worst.max()) << " ≤ 1e-9\n";
    return kExitOk;
  }
  out << "FAIL, max |Δ| = " << scientific(worst.max()) << " > 1e-9\n";
  return kExitVerifyMismatch;
}

int cmd_bench(std::size_t n_min, std::size_t n_max, std::uint64_t seed, double min_time, const std::string& format,
              std::ostream& out) {
  const BenchResult result = run_scaling_bench(n_min, n_max, seed, min_time);
  if (format == "json") {
    json doc{{"slope", result.slope}, {"samples", json::array()}};
    for (const auto& s : result.samples) {
      doc["samples"].push_back({{"n", s.n}, {"seconds_per_call", s.seconds_per_call}, {"calls", s.calls}});
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "   n        calls   seconds/call\n";
  for (const auto& s : result.samples) {
    std::array<char, 64> line{};
    std::snprintf(line.data(), line.size(), "%4zu %12zu   %.4e\n", s.n, s.calls, s.seconds_per_call);
    out << line.data();
  }
  out << "log2(time) slope per vertex: " << fixed6(result.slope) << "\n";
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dempster-Shafer support and plausibility of complete paths through an evidence DAG", "dspath"};
  app.require_subcommand(1);

  const std::vector<std::string> path_formats{"table", "json", "csv"};
  const std::vector<std::string> plain_formats{"table", "json"};

  std::string input;
  std::string format = "table";

  auto* rank = app.add_subcommand("rank", "Rank all complete paths by support");
  std::optional<std::size_t> top;
  rank->add_option("file", input, "Evidence graph (JSON)")->required();
  rank->add_option("--top", top, "Keep the best K paths")->check(CLI::PositiveNumber);
  rank->add_option("--format", format, "Output format")->check(CLI::IsMember(path_formats));

  auto* query = app.add_subcommand("query", "Support and plausibility of one path");
  std::string bits;
  query->add_option("file", input, "Evidence graph (JSON)")->required();
  query->add_option("--path", bits, "Path as a bit string, leftmost = v1, 1 = visited")->required();
  query->add_option("--format", format, "Output format")->check(CLI::IsMember(path_formats));

  auto* conflict_cmd = app.add_subcommand("conflict", "Total conflict and its per-edge contributions");
  conflict_cmd->add_option("file", input, "Evidence graph (JSON)")->required();
  conflict_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(plain_formats));

  auto* verify = app.add_subcommand("verify", "Compare the direct formulas with brute-force combination");
  VerifyArgs verify_args;
  verify->add_option("file", verify_args.input, "Evidence graph (JSON)");
  verify->add_flag("--random", verify_args.random, "Verify random instances instead of a file");
  verify->add_option("--n", verify_args.n, "Vertex count for --random")->check(CLI::PositiveNumber);
  verify->add_option("--trials", verify_args.trials, "Instances for --random");
  verify->add_option("--seed", verify_args.seed, "Seed for --random");
  verify->add_option("--oracle-cap", verify_args.oracle_cap, "Largest n the brute-force oracle accepts");
  verify->add_option("--inject-fault", verify_args.inject_fault)->group("");

  auto* bench = app.add_subcommand("bench", "Time single-path support over a range of graph sizes");
  std::size_t n_min = 14;
  std::size_t n_max = 20;
  std::uint64_t seed = 1;
  double min_time = 0.1;
  bench->add_option("--n-min", n_min, "Smallest vertex count");
  bench->add_option("--n-max", n_max, "Largest vertex count");
  bench->add_option("--seed", seed, "Seed for the random graphs");
  bench->add_option("--min-time", min_time, "Seconds of timing per vertex count");
  bench->add_option("--format", format, "Output format")->check(CLI::IsMember(plain_formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return kExitInputError;
  }

  try {
    if (rank->parsed()) return cmd_rank(input, top, format, out, err);
    if (query->parsed()) return cmd_query(input, bits, format, out, err);
    if (conflict_cmd->parsed()) return cmd_conflict(input, format, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, out);
    if (bench->parsed()) return cmd_bench(n_min, n_max, seed, min_time, format, out);
  } catch (const TotalConflictError& e) {
    err << e.what() << "\n";
    return kExitTotalConflict;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace dspath
