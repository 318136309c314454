#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "theta_guide/rng.hpp"
#include "theta_guide/search.hpp"

namespace theta_guide {

const char* to_string(HeuristicRule r) {
  switch (r) {
    case HeuristicRule::toward_one: return "toward-one";
    case HeuristicRule::symmetric: return "symmetric";
  }
  return "?";
}

std::optional<HeuristicRule> parse_heuristic_rule(const std::string& s) {
  if (s == "toward-one") return HeuristicRule::toward_one;
  if (s == "symmetric") return HeuristicRule::symmetric;
  return std::nullopt;
}

namespace {

double quantize(double s) { return std::round(s * 1e6) / 1e6; }

}  // namespace

HeuristicPath compute_heuristic(const CpModel& model, const ThetaScores& scores, HeuristicRule rule,
                                bool randomized, std::uint64_t seed) {
  const int n = model.size();
  if (static_cast<int>(scores.score.size()) != n) {
    throw std::invalid_argument("score vector does not match the model");
  }
  HeuristicPath path;
  path.source_scores = scores;
  path.values.resize(static_cast<std::size_t>(n));
  std::vector<double> key(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < key.size(); ++i) {
    const double s = quantize(scores.score[i]);
    if (rule == HeuristicRule::symmetric) {
      key[i] = std::max(s, 1.0 - s);
      path.values[i] = s >= 0.5 ? 1 : 0;
    } else {
      key[i] = s;
      path.values[i] = 1;
    }
  }

  std::vector<int> sorted(static_cast<std::size_t>(n));
  std::iota(sorted.begin(), sorted.end(), 0);
  std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    return key[static_cast<std::size_t>(a)] > key[static_cast<std::size_t>(b)];
  });
  if (!randomized) {
    path.order = std::move(sorted);
    return path;
  }

  std::mt19937_64 rng(seed);
  std::vector<int> remaining = sorted;
  while (!remaining.empty()) {
    double total = 0.0;
    for (int v : remaining) total += key[static_cast<std::size_t>(v)];
    if (!(total > 0.0)) break;
    const double r = uniform_unit(rng) * total;
    std::size_t pick = remaining.size();
    double acc = 0.0;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      const double w = key[static_cast<std::size_t>(remaining[j])];
      if (w <= 0.0) continue;
      acc += w;
      pick = j;
      if (r < acc) break;
    }
    path.order.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  path.order.insert(path.order.end(), remaining.begin(), remaining.end());
  return path;
}

StableSet dive(const CpModel& model, const HeuristicPath& path) {
  SearchState state(model);
  state.incumbent.value = -1.0;  // nothing to prune against
  for (int v : path.order) {
    if (!state.is_free(v)) continue;
    const int s = path.values[static_cast<std::size_t>(v)];
    if (propagate(state, model, v, s) == Propagation::conflict) propagate(state, model, v, 1 - s);
  }
  return {state.ones(), state.fixed_weight()};
}

DiveResult heuristic_dive(const CpModel& model, const ThetaScores& scores, std::uint64_t seed, HeuristicRule rule) {
  DiveResult out;
  out.path = compute_heuristic(model, scores, rule, false, seed);
  out.best = dive(model, out.path);
  out.dives = 1;
  for (int i = 0; i < model.size(); ++i) {
    if (model.bound_reached(out.best.value)) break;
    auto path = compute_heuristic(model, scores, rule, true, seed + static_cast<std::uint64_t>(i));
    auto found = dive(model, path);
    ++out.dives;
    if (found.value > out.best.value) {
      out.best = std::move(found);
      out.path = std::move(path);
    }
  }
  return out;
}

}  // namespace theta_guide
