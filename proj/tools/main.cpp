#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "coalition/catalog.hpp"
#include "coalition/census.hpp"
#include "coalition/constructions.hpp"
#include "coalition/error.hpp"
#include "coalition/parallel.hpp"
#include "coalition/partition.hpp"
#include "coalition/solver.hpp"
#include "coalition/verify.hpp"

using namespace coalition;

namespace {

enum Exit { kOk = 0, kInput = 2, kLimit = 3, kMismatch = 4 };

struct GraphArg {
  std::string spec, file, g6;

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", spec, "named graph, e.g. P5, C7, K1,3, S(2,1), bull, K1uK5");
    cmd->add_option("--file", file, "edge-list file")->check(CLI::ExistingFile);
    cmd->add_option("--g6", g6, "graph6 string");
  }

  Graph load() const {
    const int given = !spec.empty() + !file.empty() + !g6.empty();
    if (given != 1) throw Error(ErrorCode::ParseError, "give exactly one of a named graph, --file or --g6");
    if (!g6.empty()) return parse_graph6(g6);
    if (!file.empty()) {
      std::ifstream in(file);
      return read_edge_list(in);
    }
    return make_named(spec);
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

std::string format_block(VertexSet b, bool one) {
  std::string out;
  for (int v : b) out += (out.empty() ? "" : ",") + std::to_string(v + (one ? 1 : 0));
  return out;
}

int cmd_number(const GraphArg& in, const std::string& method, std::optional<std::uint64_t> nodes,
               std::optional<long> ms, bool one, const std::string& dot) {
  const Graph g = in.load();
  SolverConfig cfg;
  cfg.method = method == "enumerate" ? Method::Enumerate : Method::BranchAndBound;
  cfg.node_limit = nodes;
  if (ms) cfg.time_limit = std::chrono::milliseconds(*ms);
  const SolverResult r = solve(g, cfg);

  if (r.limit_exceeded)
    std::cout << "C>=" << r.value << " (limit exceeded)\n";
  else
    std::cout << "C=" << r.value << (r.no_partition ? " (no coalition partition)" : "") << '\n';
  if (r.witness) std::cout << "witness=" << format_partition(*r.witness, one) << '\n';
  std::cout << "partitions_examined=" << r.stats.partitions_examined << " nodes_pruned=" << r.stats.nodes_pruned
            << " elapsed=" << std::fixed << std::setprecision(3) << r.stats.elapsed_seconds << "s\n";
  if (!dot.empty() && r.witness) write_file(dot, coalition_graph_dot(coalition_graph(g, *r.witness), one));
  return r.limit_exceeded ? kLimit : kOk;
}

int cmd_check(const GraphArg& in, const std::string& text, bool one, const std::string& dot) {
  const Graph g = in.load();
  const VertexPartition p = parse_partition(text, g.order(), one);
  const PartitionValidity v = validate_partition(g, p);
  for (int i = 0; i < p.size(); ++i) {
    std::cout << "block " << i << " {" << format_block(p.block(i), one) << "}: " << to_string(v.blocks[i].kind);
    if (!v.blocks[i].partners.empty()) {
      std::cout << " partners";
      for (int j : v.blocks[i].partners) std::cout << ' ' << j;
    }
    std::cout << '\n';
  }
  std::cout << (v.valid ? "Valid" : "Invalid") << '\n';
  if (!v.valid) return kOk;
  const CoalitionGraph cg = coalition_graph(g, p);
  std::cout << "coalition graph edges:";
  for (auto [a, b] : cg.graph.edges()) std::cout << ' ' << a << '-' << b;
  std::cout << "\nclass=" << to_string(classify_cp(cg.graph)) << '\n';
  if (!dot.empty()) write_file(dot, coalition_graph_dot(cg, one));
  return kOk;
}

int cmd_census(int k, bool one) {
  const CensusReport r = census_path(k);
  std::cout << "NC=" << r.nc() << " (expected " << expected_nc(k) << ")\n";
  std::cout << "classes:";
  for (CpClass c : r.realizable()) std::cout << ' ' << to_string(c);
  std::cout << "\npartitions_scanned=" << r.partitions_scanned << " valid=" << r.valid_partitions
            << " max_blocks=" << r.max_blocks << " outside=" << r.outside_count << '\n';
  for (const auto& line : census_lines(r, one)) std::cout << line << '\n';
  return r.nc() == expected_nc(k) && r.outside_count == 0 ? kOk : kMismatch;
}

int cmd_table1(int k_max, bool one) {
  const Table1Report r = table1(k_max);
  std::cout << format_table1(r);
  for (const auto& m : r.mismatches)
    std::cout << (m.hard() ? "MISMATCH " : "erratum candidate ") << to_string(m.cls) << " P" << m.k
              << ": expected " << m.expected << ", computed " << (m.computed ? 'Y' : 'N') << '\n';
  for (const auto& c : r.censuses)
    for (const auto& line : census_lines(c, one)) std::cout << line << '\n';
  return r.hard_mismatches() ? kMismatch : kOk;
}

int cmd_verify(int graphs, int trees) {
  TheoremReport r;
  if (graphs > 0) r = verify_low_degree(graphs);
  if (trees > 0)
    for (auto& c : verify_trees(trees).checks) r.checks.push_back(std::move(c));
  std::cout << r.format();
  return r.ok() ? kOk : kMismatch;
}

int cmd_props(int k_max) {
  const ConstructionReport r = verify_constructions(k_max);
  for (const auto& c : r.checks)
    if (!c.ok) std::cout << "FAIL " << c.id << " k=" << c.k << ": " << c.detail << '\n';
  std::cout << "checked " << r.checks.size() << " (construction, k) pairs, " << r.failures() << " failures\n";
  return r.failures() ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalition numbers and coalition graphs of small graphs"};
  app.require_subcommand(1);
  int threads = 0;
  bool one = false;
  app.add_option("--threads", threads, "worker threads (default: all)")->check(CLI::NonNegativeNumber);

  GraphArg number_in, check_in;
  std::string method = "bnb", dot, partition;
  std::optional<std::uint64_t> node_limit;
  std::optional<long> time_limit;
  int k = 0, k_max = 12, graphs_n = 0, trees_n = 0, props_k = 30;

  auto* number = app.add_subcommand("number", "coalition number of a graph");
  number_in.attach(number);
  number->add_option("--method", method)->check(CLI::IsMember({"enumerate", "bnb"}));
  number->add_option("--node-limit", node_limit)->check(CLI::PositiveNumber);
  number->add_option("--time-limit", time_limit, "milliseconds")->check(CLI::PositiveNumber);
  number->add_option("--dot", dot, "write the witness coalition graph as DOT");
  number->add_flag("--one-indexed", one, "vertices in partitions are numbered from 1");

  auto* check = app.add_subcommand("check", "validate a partition and classify its coalition graph");
  check_in.attach(check);
  check->add_option("partition", partition, "blocks separated by '|', vertices by ','")->required();
  check->add_option("--dot", dot, "write the coalition graph as DOT");
  check->add_flag("--one-indexed", one);

  auto* census = app.add_subcommand("census", "coalition graph classes realised by a path");
  census->add_option("k", k)->required()->check(CLI::Range(1, kMaxEnumerateOrder));
  census->add_flag("--one-indexed", one);

  auto* grid = app.add_subcommand("table1", "class-by-path grid against the expected table");
  grid->add_option("k_max", k_max)->check(CLI::Range(1, kMaxEnumerateOrder));
  grid->add_flag("--one-indexed", one);

  auto* verify = app.add_subcommand("verify", "exhaustive characterisation checks");
  verify->add_option("--graphs", graphs_n, "graphs up to this order")->check(CLI::Range(0, 7));
  verify->add_option("--trees", trees_n, "trees up to this order")->check(CLI::Range(0, 12));

  auto* props = app.add_subcommand("props", "replay the path constructions");
  props->add_option("--kmax", props_k)->check(CLI::Range(10, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  set_threads(threads);

  try {
    if (*number) return cmd_number(number_in, method, node_limit, time_limit, one, dot);
    if (*check) return cmd_check(check_in, partition, one, dot);
    if (*census) return cmd_census(k, one);
    if (*grid) return cmd_table1(k_max, one);
    if (*verify) return cmd_verify(graphs_n, trees_n);
    if (*props) return cmd_props(props_k);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
