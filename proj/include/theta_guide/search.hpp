#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "theta_guide/graph.hpp"
#include "theta_guide/scores.hpp"

namespace theta_guide {

/// Binary stable-set model: x_i in {0,1}, x_i + x_j <= 1 per edge,
/// maximize sum w_i x_i. An optional upper bound (from theta) lets the
/// search stop as soon as the incumbent reaches it.
class CpModel {
 public:
  explicit CpModel(Graph g, std::optional<double> upper_bound = std::nullopt);

  const Graph& graph() const { return graph_; }
  int size() const { return graph_.vertex_count(); }
  const std::vector<int>& neighbors(int v) const { return graph_.neighbors(v); }
  double weight(int v) const { return graph_.weight(v); }
  const std::optional<double>& upper_bound() const { return upper_bound_; }
  bool integral_weights() const { return integral_; }

  /// True when `value` meets the upper bound: value >= floor(ub + 1e-6)
  /// for integer weights, value >= ub - 1e-6 otherwise.
  bool bound_reached(double value) const;

 private:
  Graph graph_;
  std::optional<double> upper_bound_;
  bool integral_ = true;
};

enum class Propagation { ok, conflict, prune };

/// Domains, trail and running weights of one search. Domains only shrink
/// from {0,1} to a single value, so a trail entry is just the variable.
class SearchState {
 public:
  static constexpr std::uint8_t kZero = 1;
  static constexpr std::uint8_t kOne = 2;
  static constexpr std::uint8_t kBoth = kZero | kOne;

  explicit SearchState(const CpModel& model);

  std::uint8_t domain(int v) const { return domains_[static_cast<std::size_t>(v)]; }
  bool is_free(int v) const { return domain(v) == kBoth; }
  bool contains(int v, int value) const { return (domain(v) & (value ? kOne : kZero)) != 0; }

  double fixed_weight() const { return fixed_weight_; }
  double free_weight() const { return free_weight_; }
  int free_count() const { return free_count_; }

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark);

  /// Fixes a free variable and records it on the trail.
  void fix(int v, int value);

  /// Variables currently fixed to 1, ascending.
  std::vector<int> ones() const;

  /// FNV-1a over the domain vector.
  std::uint64_t domain_hash() const;

  StableSet incumbent;
  long long backtracks = 0;

 private:
  const CpModel* model_;
  std::vector<std::uint8_t> domains_;
  std::vector<int> trail_;
  double fixed_weight_ = 0.0;
  double free_weight_ = 0.0;
  int free_count_ = 0;
};

/// Assigns `var = value` and propagates edge constraints. Returns conflict
/// if `value` is not in the domain or a neighbor is already fixed to 1,
/// prune if the node cannot beat the incumbent or the incumbent already
/// meets the model's upper bound, ok otherwise. With `neighbors` false only
/// the assignment itself is made (used to enumerate raw search trees).
Propagation propagate(SearchState& state, const CpModel& model, int var, int value, bool neighbors = true);

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;
  explicit Deadline(double seconds) : start_(Clock::now()), limit_(seconds) {}
  Deadline(Clock::time_point start, double seconds) : start_(start), limit_(seconds) {}
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  bool expired() const { return elapsed() >= limit_; }
  double limit() const { return limit_; }

 private:
  Clock::time_point start_;
  double limit_;
};

struct SearchOptions {
  bool propagation = true;    // neighbor propagation and bound pruning
  bool check_trail = false;   // verify domain hashes around every branch
  /// Called at every leaf with the wave number (0 for DFS) and the state.
  std::function<void(const SearchState&, int)> on_leaf;
};

/// Outcome of one tree search.
struct SearchResult {
  StableSet best;
  long long backtracks = 0;
  std::optional<int> best_discrepancy;  // wave that produced `best`, LDS only
  bool complete = false;                // tree exhausted
  bool bound_proof = false;             // stopped because best met the bound
  bool timed_out = false;
  int waves = 0;                        // LDS waves started

  bool proven() const { return complete || bound_proof; }
};

/// Lexicographic depth-first search, value 1 before 0, chronological
/// backtracking. One backtrack is counted per retracted branching decision.
SearchResult dfs_search(const CpModel& model, const Deadline& deadline, const SearchOptions& options = {},
                        const StableSet& initial = {});

/// How scores become a variable and value order.
enum class HeuristicRule {
  toward_one,  // order by score descending, suggest 1
  symmetric,   // order by max(s, 1-s) descending, suggest round(s)
};

const char* to_string(HeuristicRule r);
std::optional<HeuristicRule> parse_heuristic_rule(const std::string& s);

struct HeuristicPath {
  std::vector<int> order;
  std::vector<int> values;  // indexed by variable
  ThetaScores source_scores;
};

/// Scores are rounded to a 1e-6 grid before ordering so solver noise does not
/// break ties. The randomized variant draws the next variable by roulette
/// over the remaining ones with weight equal to its ordering key; when the
/// remaining weight is zero the rest follow the deterministic order.
HeuristicPath compute_heuristic(const CpModel& model, const ThetaScores& scores, HeuristicRule rule,
                                bool randomized, std::uint64_t seed);

/// Greedy descent along `path` without backtracking. A suggestion that
/// propagation has ruled out is replaced by the remaining value.
StableSet dive(const CpModel& model, const HeuristicPath& path);

struct DiveResult {
  StableSet best;
  HeuristicPath path;
  int dives = 0;
};

/// One dive along the deterministic path, then n = |V| dives along
/// randomized paths seeded seed, seed+1, ...; keeps the first best one.
DiveResult heuristic_dive(const CpModel& model, const ThetaScores& scores, std::uint64_t seed,
                          HeuristicRule rule = HeuristicRule::toward_one);

/// Limited discrepancy search around `path`. Wave k visits the leaves that
/// deviate from the suggested value at exactly k branching decisions;
/// values forced by propagation are not decisions. Waves stop after
/// `max_discrepancy` (unbounded when empty) or once a wave finds no
/// decision left to deviate at, which marks the tree as exhausted.
SearchResult lds_search(const CpModel& model, const HeuristicPath& path, std::optional<int> max_discrepancy,
                        const Deadline& deadline, const SearchOptions& options = {},
                        const StableSet& initial = {});

}  // namespace theta_guide
