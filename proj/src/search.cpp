#include "theta_guide/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace theta_guide {

CpModel::CpModel(Graph g, std::optional<double> upper_bound)
    : graph_(std::move(g)), upper_bound_(upper_bound), integral_(graph_.integral_weights()) {}

bool CpModel::bound_reached(double value) const {
  if (!upper_bound_) return false;
  if (integral_) return value >= std::floor(*upper_bound_ + 1e-6);
  return value >= *upper_bound_ - 1e-6;
}

SearchState::SearchState(const CpModel& model)
    : model_(&model), domains_(static_cast<std::size_t>(model.size()), kBoth), free_count_(model.size()) {
  trail_.reserve(domains_.size());
  for (int v = 0; v < model.size(); ++v) free_weight_ += model.weight(v);
}

void SearchState::fix(int v, int value) {
  auto& d = domains_[static_cast<std::size_t>(v)];
  const double w = model_->weight(v);
  d = value ? kOne : kZero;
  free_weight_ -= w;
  if (value) fixed_weight_ += w;
  --free_count_;
  trail_.push_back(v);
}

void SearchState::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    const int v = trail_.back();
    trail_.pop_back();
    auto& d = domains_[static_cast<std::size_t>(v)];
    const double w = model_->weight(v);
    if (d == kOne) fixed_weight_ -= w;
    free_weight_ += w;
    ++free_count_;
    d = kBoth;
  }
  if (trail_.empty()) {
    // re-anchor the running sums so rounding never accumulates
    fixed_weight_ = 0.0;
    free_weight_ = 0.0;
    for (int v = 0; v < model_->size(); ++v) free_weight_ += model_->weight(v);
  }
}

std::vector<int> SearchState::ones() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < domains_.size(); ++v) {
    if (domains_[v] == kOne) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::uint64_t SearchState::domain_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto d : domains_) {
    h ^= d;
    h *= 1099511628211ull;
  }
  return h;
}

Propagation propagate(SearchState& state, const CpModel& model, int var, int value, bool neighbors) {
  if (!state.contains(var, value)) return Propagation::conflict;
  if (state.is_free(var)) state.fix(var, value);
  if (!neighbors) return Propagation::ok;
  if (value == 1) {
    for (int u : model.neighbors(var)) {
      const auto d = state.domain(u);
      if (d == SearchState::kOne) return Propagation::conflict;
      if (d == SearchState::kBoth) state.fix(u, 0);
    }
  }
  if (state.fixed_weight() + state.free_weight() <= state.incumbent.value) return Propagation::prune;
  if (model.bound_reached(state.incumbent.value)) return Propagation::prune;
  return Propagation::ok;
}

namespace {

// Shared machinery of the two tree searches: incumbent bookkeeping, the
// deadline poll and the optional trail check.
class Engine {
 public:
  Engine(const CpModel& model, const Deadline& deadline, const SearchOptions& options, const StableSet& initial)
      : model_(model), deadline_(deadline), options_(options), state_(model) {
    state_.incumbent = initial;
    if (model_.bound_reached(initial.value)) {
      result_.bound_proof = true;
      stop_ = true;
    }
  }

  bool root_open() const {
    return !options_.propagation || model_.size() == 0 ||
           state_.fixed_weight() + state_.free_weight() > state_.incumbent.value;
  }

  SearchResult finish() {
    result_.best = state_.incumbent;
    result_.backtracks = state_.backtracks;
    return result_;
  }

 protected:
  bool poll() {
    if (stop_) return false;
    if ((++nodes_ & 1023u) == 0 && deadline_.expired()) {
      result_.timed_out = true;
      stop_ = true;
      return false;
    }
    return true;
  }

  // wave < 0 marks a search without discrepancy accounting
  void leaf(int wave) {
    if (options_.on_leaf) options_.on_leaf(state_, std::max(wave, 0));
    const double value = state_.fixed_weight();
    if (value <= state_.incumbent.value) return;
    auto members = state_.ones();
    if (!options_.propagation && !is_stable_set(model_.graph(), members)) return;
    state_.incumbent = {std::move(members), value};
    if (wave >= 0) result_.best_discrepancy = wave;
    if (model_.bound_reached(value)) {
      result_.bound_proof = true;
      stop_ = true;
    }
  }

  /// Runs `body` after assigning var = value and restores the state after.
  /// Returns false once the search has to stop.
  /// Retractions are only charged once the search moves on to another
  /// branch, so the final unwind of a finished search costs nothing.
  template <class Body>
  bool branch(int var, int value, Body&& body) {
    state_.backtracks += pending_;
    pending_ = 0;
    const auto mark = state_.mark();
    const auto hash = options_.check_trail ? state_.domain_hash() : 0;
    const auto r = propagate(state_, model_, var, value, options_.propagation);
    if (r == Propagation::ok) body();
    state_.undo(mark);
    if (options_.check_trail && state_.domain_hash() != hash) {
      throw std::logic_error("trail did not restore the domains");
    }
    if (stop_) return false;
    ++pending_;
    return true;
  }

  const CpModel& model_;
  const Deadline& deadline_;
  const SearchOptions& options_;
  SearchState state_;
  SearchResult result_;
  bool stop_ = false;
  long long pending_ = 0;
  std::uint64_t nodes_ = 0;
};

class Dfs : public Engine {
 public:
  using Engine::Engine;

  SearchResult run() {
    if (!stop_ && root_open()) descend(0);
    result_.complete = !stop_;
    return finish();
  }

 private:

  void descend(int pos) {
    if (!poll()) return;
    const int n = model_.size();
    while (pos < n && !state_.is_free(pos)) ++pos;
    if (pos == n) {
      leaf(-1);
      return;
    }
    if (!branch(pos, 1, [&] { descend(pos + 1); })) return;
    branch(pos, 0, [&] { descend(pos + 1); });
  }
};

class Lds : public Engine {
 public:
  Lds(const CpModel& model, const HeuristicPath& path, const Deadline& deadline, const SearchOptions& options,
      const StableSet& initial)
      : Engine(model, deadline, options, initial), path_(path) {
    if (static_cast<int>(path.order.size()) != model.size() ||
        static_cast<int>(path.values.size()) != model.size()) {
      throw std::invalid_argument("heuristic path does not cover the model");
    }
  }

  SearchResult run(std::optional<int> max_discrepancy) {
    const int n = model_.size();
    const int last = max_discrepancy ? std::min(*max_discrepancy, n) : n;
    for (int k = 0; k <= last && !stop_; ++k) {
      ++result_.waves;
      wave_ = k;
      more_ = false;
      if (root_open()) probe(0, k);
      if (stop_) break;
      if (!more_) {
        result_.complete = true;
        break;
      }
    }
    return finish();
  }

 private:
  void probe(int pos, int k) {
    if (!poll()) return;
    const int n = model_.size();
    while (pos < n && !state_.is_free(path_.order[static_cast<std::size_t>(pos)])) ++pos;
    if (pos == n) {
      if (k == 0) leaf(wave_);
      return;
    }
    if (k > state_.free_count()) return;
    const int v = path_.order[static_cast<std::size_t>(pos)];
    const int s = path_.values[static_cast<std::size_t>(v)];
    if (k == 0) more_ = true;
    if (k <= state_.free_count() - 1) {
      if (!branch(v, s, [&] { probe(pos + 1, k); })) return;
    }
    if (k > 0) branch(v, 1 - s, [&] { probe(pos + 1, k - 1); });
  }

  const HeuristicPath& path_;
  int wave_ = 0;
  bool more_ = false;
};

}  // namespace

SearchResult dfs_search(const CpModel& model, const Deadline& deadline, const SearchOptions& options,
                        const StableSet& initial) {
  return Dfs(model, deadline, options, initial).run();
}

SearchResult lds_search(const CpModel& model, const HeuristicPath& path, std::optional<int> max_discrepancy,
                        const Deadline& deadline, const SearchOptions& options, const StableSet& initial) {
  return Lds(model, path, deadline, options, initial).run(max_discrepancy);
}

}  // namespace theta_guide
