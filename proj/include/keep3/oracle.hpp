#pragma once

// Exhaustive ground truth: brute-force embedding enumeration, small-graph
// enumeration, and corpus-scale agreement runs against the constructive finder.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "keep3/connectivity.hpp"
#include "keep3/embed.hpp"
#include "keep3/graph.hpp"
#include "keep3/tree.hpp"

namespace keep3 {

// Calls visit for every labeled embedding of t into g (automorphic images
// are distinct hits). Pattern vertices are placed in breadth-first order
// from pattern vertex 0; host candidates are tried in increasing id order,
// so the visit order is deterministic. Returning false from visit stops the
// enumeration early; the function returns true iff it was stopped that way.
bool enumerate_tree_embeddings(const Graph& g, const TreePattern& t,
                               const std::function<bool(const Embedding&)>& visit);

std::int64_t count_tree_embeddings(const Graph& g, const TreePattern& t);

// First enumerated embedding whose edge removal keeps the mode-k predicate;
// empty means the full enumeration certified that none exists.
std::optional<Embedding> oracle_find(const Graph& g, const TreePattern& t, Mode mode,
                                     int k = 3);

// Number of embeddings whose removal keeps the mode-k predicate.
std::int64_t count_removable_embeddings(const Graph& g, const TreePattern& t, Mode mode,
                                        int k = 3);

// Calls visit for every labeled graph on n vertices with minimum degree at
// least min_deg satisfying the mode-k connectivity predicate, in increasing
// order of the C(n,2)-bit adjacency mask. Throws std::invalid_argument for
// n < 0 or n > 7 (2^21 masks at n = 7 is the intended budget).
void enumerate_graphs_labeled(int n, int min_deg, int k, Mode mode,
                              const std::function<void(const Graph&)>& visit);

enum class Engine { finder, oracle, both };

const char* engine_name(Engine e);

struct ExploreRecord {
  int graph_index = -1;    // position in the corpus (0-based, parse failures skipped)
  std::string graph6;      // canonical re-encoding of the corpus graph
  int m = 0;               // tree order
  int tree_index = -1;     // position in enumerate_trees(m)
  bool hypotheses = false; // min degree >= k + m - 1 and the mode-k predicate
  // Outcomes: "ok"/"fail"/"skip" for the finder, "found"/"none"/"skip" for
  // the oracle. The finder only runs at k = 3 (its machinery is specific to
  // that threshold); the oracle runs at any k.
  std::string finder;
  std::string oracle;
  bool agree = true;         // false only when both engines ran and disagreed
  bool counterexample = false;  // hypotheses hold and the oracle certified "none"
  std::int64_t removable_count = -1;  // filled when count_all was requested
  double millis = 0.0;       // wall time; reporting keeps this off the record line
  std::string bundle;        // replay bundle, present iff !agree || counterexample

  // One line: "record graph=.. m=.. tree=.. hyp=.. finder=.. oracle=.."
  // plus agree/cex flags and, when counted, "count=..". No timing.
  std::string format() const;
};

struct ParseIssue {
  std::size_t line = 0;  // 1-based corpus line
  std::string message;
};

struct ExploreReport {
  Mode mode = Mode::vertex;
  int k = 3;
  Engine engine = Engine::both;
  std::vector<int> m_values;
  std::vector<ExploreRecord> records;       // in corpus x tree order
  std::vector<std::size_t> counterexamples; // indices into records
  std::vector<std::size_t> disagreements;   // indices into records
  std::vector<ParseIssue> parse_issues;

  std::string summary() const;  // human-readable tail block
};

// Runs every (graph, tree) instance: hypotheses are checked, the selected
// engines run, and their verdicts are compared when both ran. Corpus lines
// that fail to parse as graph6 are recorded and skipped. Work is sharded
// over `workers` threads in contiguous chunks and merged in instance order,
// so the report is deterministic. count_all additionally counts all
// removable embeddings per instance (oracle-priced; implies oracle work).
ExploreReport explore(const std::vector<std::string>& corpus_lines,
                      const std::vector<int>& m_values, int k, Mode mode, Engine engine,
                      int workers = 1, bool count_all = false);

}  // namespace keep3
