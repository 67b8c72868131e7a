// triplesys: command line front end for the 3-graph toolkit.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 usage or precondition
// error, 3 internal contradiction. Results go to stdout, progress to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "triplesys/codegree.hpp"
#include "triplesys/errors.hpp"
#include "triplesys/extremal_values.hpp"
#include "triplesys/io.hpp"
#include "triplesys/pattern.hpp"
#include "triplesys/search.hpp"
#include "triplesys/witness.hpp"

namespace ts = triplesys;

namespace {

enum ExitCode : int { kOk = 0, kIoError = 1, kUsage = 2, kContradiction = 3 };

// Not a precondition of the math, but of the command line itself.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  int n = 0;
  int k = 0;
  std::string input;
  std::string output;
  std::string pattern;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;
};

ts::PatternId pattern_arg(const std::string& name) {
  if (name.empty()) throw UsageError("--pattern is required");
  const auto id = ts::parse_pattern_id(name);
  if (!id) throw UsageError("unknown pattern '" + name + "' (expected k4minus, k4, c5minus, c5 or f32)");
  return *id;
}

ts::TripleSystem load(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  try {
    return ts::load_hypergraph(path);
  } catch (const ts::ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

// Writes to --output when given, else stdout.
void emit(const Args& args, const std::string& text) {
  if (args.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw IoError("cannot write " + args.output);
  out << text;
  if (!out) throw IoError("error writing " + args.output);
}

void save(const std::string& path, const ts::TripleSystem& host) {
  try {
    ts::save_hypergraph(path, host);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

std::string delta_text(const std::optional<int>& d) { return d ? std::to_string(*d) : "undefined"; }

// Hypergraph text prefixed by '#' comment lines, so the stream stays loadable.
std::string annotated(const ts::TripleSystem& host, const std::vector<std::string>& notes) {
  std::string out;
  for (const auto& line : notes) out += "# " + line + "\n";
  return out + ts::to_hypergraph_text(host);
}

int cmd_construct(const Args& args) {
  if (args.k < 3) throw UsageError("--k must be at least 3");
  if (args.n < args.k) throw UsageError("--n must be at least --k");
  if (args.n > ts::kMaxVertices) throw UsageError("--n must be at most 64");
  const auto c = ts::construct_complete_k_partite(args.n, args.k);
  const std::string delta = "delta2+ " + delta_text(ts::min_positive_codegree(c.host));
  const std::string edges = "edges " + std::to_string(c.host.edge_count());
  if (args.output.empty()) {
    std::cout << annotated(c.host, {delta, edges});
  } else {
    save(args.output, c.host);
    std::cout << delta << '\n' << edges << '\n';
  }
  return kOk;
}

int cmd_stats(const Args& args) {
  const auto host = load(args.input);
  const auto table = ts::build_codegree_table(host);
  std::ostringstream out;
  out << "n " << host.order() << '\n'
      << "edges " << host.edge_count() << '\n'
      << "delta2+ " << delta_text(table.min_positive_codegree()) << '\n'
      << "support_pairs " << table.support_pairs().size() << '\n'
      << "min_support_codegree " << delta_text(table.min_positive_codegree()) << '\n'
      << "max_support_codegree " << delta_text(table.max_positive_codegree()) << '\n';
  emit(args, out.str());
  return kOk;
}

int cmd_free(const Args& args) {
  const auto id = pattern_arg(args.pattern);
  const auto host = load(args.input);
  const auto e = ts::find_embedding(host, id);
  nlohmann::ordered_json doc;
  doc["pattern"] = ts::pattern_name(id);
  doc["free"] = !e.has_value();
  if (e) doc["embedding"] = ts::to_json(*e);
  emit(args, doc.dump() + "\n");
  return kOk;
}

int cmd_witness(const Args& args) {
  const auto id = pattern_arg(args.pattern);
  const auto host = load(args.input);
  ts::Embedding e;
  if (id == ts::PatternId::C5) {
    e = ts::find_c5_witness(host);
  } else if (id == ts::PatternId::C5Minus) {
    e = ts::find_c5minus_witness(host);
  } else {
    throw UsageError("witness extraction supports c5 and c5minus only");
  }
  emit(args, ts::to_json(e).dump() + "\n");
  return kOk;
}

int cmd_analyze(const Args& args) {
  const auto host = load(args.input);
  const int n = host.order();
  const auto delta = ts::min_positive_codegree(host);
  nlohmann::ordered_json doc;
  if (delta && n % 2 == 0 && *delta == n / 2) {
    const auto analysis = ts::analyze_half_degree(host);
    doc = ts::to_json(ts::Certificate(analysis.result));
    doc["facts_exercised"] = analysis.facts_exercised;
    std::string facts;
    for (int f : analysis.facts_exercised) facts += " " + std::to_string(f);
    std::cerr << "facts exercised:" << (facts.empty() ? " none" : facts) << '\n';
  } else if (delta && *delta > n / 2) {
    doc = ts::to_json(ts::find_c5_witness(host));
    doc["facts_exercised"] = nlohmann::ordered_json::array();
    std::cerr << "delta2+ above n/2: C5 extraction, no facts needed\n";
  } else {
    throw ts::PreconditionViolated("analyze needs delta2+ = n/2 with n even, or delta2+ > n/2; got delta2+ = " +
                                   delta_text(delta) + " at n = " + std::to_string(n));
  }
  emit(args, doc.dump() + "\n");
  return kOk;
}

int cmd_exact(const Args& args) {
  const auto id = pattern_arg(args.pattern);
  if (args.n < 4 || args.n > 7) throw UsageError("exact search needs 4 <= --n <= 7");
  if (args.jobs < 1) throw UsageError("--jobs must be positive");
  ts::SearchOptions opts;
  opts.jobs = args.jobs;
  opts.progress = [](const std::string& line) { std::cerr << line << '\n'; };
  const auto outcome = ts::exact_copos_ex(args.n, id, opts);
  const std::string sidecar = args.output.empty()
                                  ? "exact-n" + std::to_string(args.n) + "-" + std::string(ts::pattern_name(id)) + ".txt"
                                  : args.output;
  save(sidecar, outcome.extremal);
  std::cerr << "nodes " << outcome.nodes_explored << ", elapsed " << outcome.elapsed.count() << " ms, host -> "
            << sidecar << '\n';
  std::cout << ts::to_json(outcome).dump() << '\n';
  return kOk;
}

int cmd_localsearch(const Args& args, bool seed_given) {
  const auto id = pattern_arg(args.pattern);
  if (!seed_given) throw UsageError("--seed is required for localsearch");
  if (args.n < 8 || args.n > 24) throw UsageError("local search needs 8 <= --n <= 24");
  const auto host = ts::local_search_lower_bound(args.n, id, args.budget, args.seed);
  const std::string delta = "delta2+ " + delta_text(ts::min_positive_codegree(host));
  const std::string edges = "edges " + std::to_string(host.edge_count());
  if (args.output.empty()) {
    std::cout << annotated(host, {delta, edges});
  } else {
    save(args.output, host);
    std::cout << delta << '\n' << edges << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-uniform hypergraph toolkit: positive co-degree extremal problems"};
  app.require_subcommand(1, 1);
  Args args;

  auto* construct = app.add_subcommand("construct", "complete balanced k-partite 3-graph");
  construct->add_option("--n", args.n, "vertex count")->required();
  construct->add_option("--k", args.k, "number of parts")->required();
  construct->add_option("--output,-o", args.output, "output hypergraph file");

  auto* stats = app.add_subcommand("stats", "co-degree statistics");
  stats->add_option("--input,-i", args.input)->required();
  stats->add_option("--output,-o", args.output);

  auto* free_cmd = app.add_subcommand("free", "check whether a host avoids a pattern");
  free_cmd->add_option("--input,-i", args.input)->required();
  free_cmd->add_option("--pattern,-p", args.pattern)->required();
  free_cmd->add_option("--output,-o", args.output);

  auto* witness = app.add_subcommand("witness", "extract a c5 or c5minus above the threshold");
  witness->add_option("--input,-i", args.input)->required();
  witness->add_option("--pattern,-p", args.pattern)->required();
  witness->add_option("--output,-o", args.output);

  auto* analyze = app.add_subcommand("analyze", "half-degree analysis: a C5 or a 4 | n certificate");
  analyze->add_option("--input,-i", args.input)->required();
  analyze->add_option("--output,-o", args.output);

  auto* exact = app.add_subcommand("exact", "exact co+ex(n, pattern) for n <= 7");
  exact->add_option("--n", args.n)->required();
  exact->add_option("--pattern,-p", args.pattern)->required();
  exact->add_option("--jobs,-j", args.jobs, "worker threads");
  exact->add_option("--output,-o", args.output, "sidecar file for the extremal host");

  auto* local = app.add_subcommand("localsearch", "hill-climb for F-free hosts with large delta2+");
  local->add_option("--n", args.n)->required();
  local->add_option("--pattern,-p", args.pattern)->required();
  auto* seed_opt = local->add_option("--seed", args.seed, "RNG seed (required)");
  local->add_option("--budget", args.budget, "step count");
  local->add_option("--output,-o", args.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(args);
    if (*stats) return cmd_stats(args);
    if (*free_cmd) return cmd_free(args);
    if (*witness) return cmd_witness(args);
    if (*analyze) return cmd_analyze(args);
    if (*exact) return cmd_exact(args);
    if (*local) return cmd_localsearch(args, seed_opt->count() > 0);
  } catch (const ts::InternalContradiction& e) {
    std::cerr << "internal contradiction: " << e.what() << '\n' << e.diagnostics() << '\n';
    return kContradiction;
  } catch (const ts::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kIoError;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
