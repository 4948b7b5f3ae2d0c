// Command-line front end: find / verify / oracle / explore / gen-trees /
// gen-random, wired over the keep3 library. Primary results go to stdout;
// warnings and timings go to stderr so identical inputs give byte-identical
// primary output.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "keep3/connectivity.hpp"
#include "keep3/embed.hpp"
#include "keep3/graph.hpp"
#include "keep3/oracle.hpp"
#include "keep3/randgraph.hpp"
#include "keep3/search.hpp"
#include "keep3/tree.hpp"

namespace {

using namespace keep3;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// graph6 bytes live in [63,126]; digits and '#' never do, so a leading digit
// or comment marks an edge list.
Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  std::string kind = format;
  if (kind == "auto") {
    kind = "graph6";
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '#') kind = "edgelist";
      break;
    }
  }
  if (kind == "edgelist") return parse_edge_list(text);
  std::istringstream in(text);
  std::string word;
  if (!(in >> word)) throw UsageError("empty graph file: " + path);
  return parse_graph6(word);
}

TreePattern load_tree(const std::string& parent_array, const std::string& tree_file,
                      const std::string& tree_edges) {
  int given = !parent_array.empty();
  given += !tree_file.empty();
  given += !tree_edges.empty();
  if (given != 1)
    throw UsageError("give the tree exactly one way: --tree, --tree-file, or --tree-edges");
  if (!parent_array.empty()) return TreePattern::parse(parent_array);
  if (!tree_file.empty()) {
    std::istringstream in(slurp(tree_file));
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (line[line.find_first_not_of(" \t\r")] == '#') continue;
      return TreePattern::parse(line);
    }
    throw UsageError("no tree line in file: " + tree_file);
  }
  // "u-v,u-v,..." over vertices 0..m-1
  std::vector<Edge> edges;
  std::istringstream in(tree_edges);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw UsageError("bad --tree-edges item: " + item);
    try {
      edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw UsageError("bad --tree-edges item: " + item);
    }
  }
  int top = -1;
  for (const Edge& e : edges) top = std::max(top, e.v);
  return TreePattern::from_edges(top + 1, edges);
}

Mode parse_mode(const std::string& mode) {
  if (mode == "vertex") return Mode::vertex;
  if (mode == "edge") return Mode::edge;
  throw UsageError("mode must be vertex or edge, got " + mode);
}

const char* verdict(Mode mode) {
  return mode == Mode::vertex ? "verified 3-connected" : "verified 3-edge-connected";
}

int default_workers() {
  if (const char* env = std::getenv("KEEP3_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

void print_embedding_edges(std::ostream& out, const Embedding& emb) {
  for (const Edge& e : emb.image_edges()) out << e.u << " " << e.v << "\n";
}

int run_find(const std::string& graph_path, const std::string& format,
             const TreePattern& tree, Mode mode, long move_budget, long backtrack_budget) {
  const Graph g = load_graph(graph_path, format);
  SearchOptions opt;
  opt.mode = mode;
  opt.move_budget = move_budget;
  opt.backtrack_budget = backtrack_budget;
  const FindResult res = find_removable_tree(g, tree, opt);
  for (const std::string& w : res.warnings) std::cerr << "warning: " << w << "\n";
  if (!res.ok()) {
    std::cerr << "find failed: " << res.failure->reason << "\n";
    std::cerr << res.failure->bundle;
    return kExitFailure;
  }
  std::string why;
  if (!verify_removal(g, tree, *res.tree, mode, &why)) {
    std::cerr << "internal error: search result failed re-verification: " << why << "\n";
    return kExitFailure;
  }
  print_embedding_edges(std::cout, *res.tree);
  std::cout << verdict(mode) << "\n";
  return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& format,
               const std::optional<TreePattern>& tree, const std::string& embedding_path,
               Mode mode) {
  const Graph g = load_graph(graph_path, format);
  std::vector<Edge> edges;
  std::istringstream in(slurp(embedding_path));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto at = line.find_first_not_of(" \t\r");
    if (at == std::string::npos || line[at] == '#') continue;
    std::istringstream row(line);
    int u, v;
    if (!(row >> u >> v)) throw UsageError("bad edge line " + std::to_string(lineno) +
                                           " in " + embedding_path);
    if (u == v) {
      std::cout << "invalid: self-loop " << u << " " << v << " on line "
                << std::to_string(lineno) << "\n";
      return kExitFailure;
    }
    edges.emplace_back(u, v);
  }
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      std::cout << "invalid: " << e.u << " " << e.v << " is not an edge of the graph\n";
      return kExitFailure;
    }
  }
  // Relabel the host vertices to 0..m-1 and let the tree validator decide.
  std::vector<int> verts;
  for (const Edge& e : edges) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto rank = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<Edge> relabeled;
  for (const Edge& e : edges) relabeled.emplace_back(rank(e.u), rank(e.v));
  std::optional<TreePattern> shape;
  try {
    shape = TreePattern::from_edges(static_cast<int>(verts.size()), relabeled);
  } catch (const std::exception& ex) {
    std::cout << "invalid: the edge set is not a tree (" << ex.what() << ")\n";
    return kExitFailure;
  }
  if (tree && shape->ahu_canonical() != tree->ahu_canonical()) {
    std::cout << "invalid: the subgraph is a tree of order " << shape->order()
              << " but not isomorphic to the requested pattern\n";
    return kExitFailure;
  }
  EdgeSet gone(edges);
  if (!connectivity_at_least(remove_edges(g, gone), 3, mode)) {
    std::cout << "invalid: removing the edges breaks the connectivity requirement ("
              << mode_name(mode) << " mode)\n";
    return kExitFailure;
  }
  std::cout << verdict(mode) << "\n";
  return kExitOk;
}

int run_oracle(const std::string& graph_path, const std::string& format,
               const TreePattern& tree, Mode mode, int k, bool count_all) {
  const Graph g = load_graph(graph_path, format);
  if (count_all) {
    std::cout << "count " << count_removable_embeddings(g, tree, mode, k) << "\n";
    return kExitOk;
  }
  const std::optional<Embedding> hit = oracle_find(g, tree, mode, k);
  if (!hit) {
    std::cout << "none\n";
    return kExitFailure;
  }
  print_embedding_edges(std::cout, *hit);
  std::cout << "found\n";
  return kExitOk;
}

int run_explore(const std::string& corpus_path, const std::vector<int>& m_values, int k,
                Mode mode, const std::string& engine_flag, int workers, bool count_all,
                const std::string& output_path) {
  Engine engine = Engine::both;
  if (engine_flag == "finder")
    engine = Engine::finder;
  else if (engine_flag == "oracle")
    engine = Engine::oracle;
  else if (engine_flag != "both")
    throw UsageError("engine must be finder, oracle, or both, got " + engine_flag);

  std::vector<std::string> lines;
  {
    std::istringstream in(slurp(corpus_path));
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  const auto started = std::chrono::steady_clock::now();
  const ExploreReport report = explore(lines, m_values, k, mode, engine, workers, count_all);
  const double total_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started)
                              .count();

  std::ofstream file_out;
  if (!output_path.empty()) {
    file_out.open(output_path, std::ios::binary);
    if (!file_out) throw UsageError("cannot open output file: " + output_path);
  }
  std::ostream& out = output_path.empty() ? std::cout : file_out;
  for (const ParseIssue& issue : report.parse_issues)
    out << "parse_error line=" << issue.line << " " << issue.message << "\n";
  for (const ExploreRecord& rec : report.records) out << rec.format() << "\n";
  for (std::size_t idx : report.disagreements) out << report.records[idx].bundle;
  for (std::size_t idx : report.counterexamples)
    if (report.records[idx].agree)  // bundle not already printed above
      out << report.records[idx].bundle;
  out << report.summary() << "\n";
  std::cerr << "explore wall time: " << total_ms << " ms over " << report.records.size()
            << " instances\n";
  return report.counterexamples.empty() ? kExitOk : kExitFailure;
}

int run_gen_trees(int m, const std::string& output_path) {
  std::ofstream file_out;
  if (!output_path.empty()) {
    file_out.open(output_path, std::ios::binary);
    if (!file_out) throw UsageError("cannot open output file: " + output_path);
  }
  std::ostream& out = output_path.empty() ? std::cout : file_out;
  for (const TreePattern& t : enumerate_trees(m)) out << t.format() << "\n";
  return kExitOk;
}

int run_gen_random(int n_min, int n_max, int m, int count, unsigned seed,
                   const std::string& output_path) {
  if (n_min < 1 || n_max < n_min) throw UsageError("need 1 <= n-min <= n-max");
  if (m < 1) throw UsageError("need m >= 1");
  std::ofstream file_out;
  if (!output_path.empty()) {
    file_out.open(output_path, std::ios::binary);
    if (!file_out) throw UsageError("cannot open output file: " + output_path);
  }
  std::ostream& out = output_path.empty() ? std::cout : file_out;
  std::mt19937 rng(seed);
  int made = 0;
  long long attempts = 0;
  const long long attempt_cap = 1000LL * count + 1000;
  while (made < count && attempts < attempt_cap) {
    ++attempts;
    const int n = n_min + static_cast<int>(rng_below(
                              rng, static_cast<std::uint32_t>(n_max - n_min + 1)));
    const int lo = m + 2;
    const int hi = std::min(n - 1, m + 5);
    if (hi < lo) continue;  // n too small for the degree window
    const std::optional<Graph> g = random_near_regular(n, lo, hi, rng);
    if (!g || !vertex_connectivity_at_least(*g, 3)) continue;
    out << encode_graph6(*g) << "\n";
    ++made;
  }
  if (made < count) {
    std::cerr << "gen-random: produced only " << made << " of " << count
              << " graphs within the attempt budget\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive search for removable tree copies in 3-connected hosts"};
  app.require_subcommand(1);

  std::string graph_path, format = "auto", tree_arg, tree_file, tree_edges;
  std::string mode_flag = "vertex";
  long move_budget = -1, backtrack_budget = kDefaultBacktrackBudget;

  auto add_graph_flags = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_path, "graph file (graph6 or edge list)")->required();
    cmd->add_option("--format", format, "auto|graph6|edgelist")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  };
  auto add_tree_flags = [&](CLI::App* cmd) {
    cmd->add_option("--tree", tree_arg, "tree as a parent array: \"m p1 ... p_{m-1}\"");
    cmd->add_option("--tree-file", tree_file, "file whose first line is a parent array");
    cmd->add_option("--tree-edges", tree_edges, "tree edges \"u-v,u-v,...\"");
  };
  auto add_mode_flag = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode_flag, "vertex|edge")
        ->check(CLI::IsMember({"vertex", "edge"}));
  };

  CLI::App* find_cmd = app.add_subcommand("find", "constructively find a removable tree copy");
  add_graph_flags(find_cmd);
  add_tree_flags(find_cmd);
  add_mode_flag(find_cmd);
  find_cmd->add_option("--move-budget", move_budget, "max improvement moves (default n^2)");
  find_cmd->add_option("--backtrack-budget", backtrack_budget,
                       "backtracking budget per embedding attempt");

  std::string embedding_path;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a provided tree copy");
  add_graph_flags(verify_cmd);
  add_tree_flags(verify_cmd);
  add_mode_flag(verify_cmd);
  verify_cmd->add_option("--tree-embedding", embedding_path,
                         "file of host edge lines \"u v\" forming the tree copy")
      ->required();

  int oracle_k = 3;
  bool count_all = false;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive embedding search");
  add_graph_flags(oracle_cmd);
  add_tree_flags(oracle_cmd);
  add_mode_flag(oracle_cmd);
  oracle_cmd->add_option("--k", oracle_k, "connectivity threshold (default 3)");
  oracle_cmd->add_flag("--count", count_all, "count all removable embeddings");

  std::string corpus_path, engine_flag = "both", output_path;
  std::vector<int> m_values;
  int explore_k = 3;
  int workers = default_workers();
  bool explore_count_all = false;
  CLI::App* explore_cmd = app.add_subcommand("explore", "corpus-scale agreement run");
  explore_cmd->add_option("--corpus", corpus_path, "graph6 file, one graph per line")
      ->required();
  explore_cmd->add_option("--m", m_values, "tree orders to test")->required();
  explore_cmd->add_option("--k", explore_k, "connectivity threshold (default 3)");
  add_mode_flag(explore_cmd);
  explore_cmd->add_option("--engine", engine_flag, "finder|oracle|both")
      ->check(CLI::IsMember({"finder", "oracle", "both"}));
  explore_cmd->add_option("--workers", workers,
                          "worker threads (default $KEEP3_WORKERS or 1)");
  explore_cmd->add_flag("--count-all", explore_count_all,
                        "count all removable embeddings per instance");
  explore_cmd->add_option("--output", output_path, "write the report here instead of stdout");

  int gen_m = 0;
  CLI::App* gen_trees_cmd = app.add_subcommand("gen-trees", "list all trees of one order");
  gen_trees_cmd->add_option("--m", gen_m, "tree order")->required();
  gen_trees_cmd->add_option("--output", output_path, "write the list here instead of stdout");

  int n_min = 12, n_max = 40, rand_m = 3, rand_count = 1;
  unsigned seed = 1;
  CLI::App* gen_random_cmd =
      app.add_subcommand("gen-random", "random 3-connected near-regular graph6 corpus");
  gen_random_cmd->add_option("--n-min", n_min, "smallest order");
  gen_random_cmd->add_option("--n-max", n_max, "largest order");
  gen_random_cmd->add_option("--m", rand_m, "tree order the corpus should serve");
  gen_random_cmd->add_option("--count", rand_count, "how many graphs")->required();
  gen_random_cmd->add_option("--seed", seed, "random seed");
  gen_random_cmd->add_option("--output", output_path, "write graph6 here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Mode mode = parse_mode(mode_flag);
    if (find_cmd->parsed()) {
      return run_find(graph_path, format, load_tree(tree_arg, tree_file, tree_edges), mode,
                      move_budget, backtrack_budget);
    }
    if (verify_cmd->parsed()) {
      std::optional<TreePattern> tree;
      if (!tree_arg.empty() || !tree_file.empty() || !tree_edges.empty())
        tree = load_tree(tree_arg, tree_file, tree_edges);
      return run_verify(graph_path, format, tree, embedding_path, mode);
    }
    if (oracle_cmd->parsed()) {
      return run_oracle(graph_path, format, load_tree(tree_arg, tree_file, tree_edges),
                        mode, oracle_k, count_all);
    }
    if (explore_cmd->parsed()) {
      return run_explore(corpus_path, m_values, explore_k, mode, engine_flag, workers,
                         explore_count_all, output_path);
    }
    if (gen_trees_cmd->parsed()) return run_gen_trees(gen_m, output_path);
    if (gen_random_cmd->parsed())
      return run_gen_random(n_min, n_max, rand_m, rand_count, seed, output_path);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const EdgeListError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const Graph6Error& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFailure;
  }
}
