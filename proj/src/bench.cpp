#include "theta_guide/bench.hpp"

#include <atomic>
#include <charconv>
#include <filesystem>
#include <map>
#include <sstream>
#include <thread>

#include "theta_guide/instances.hpp"

namespace theta_guide {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

template <class T>
T parse_number(const std::string& s, const std::string& context) {
  T v{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw InputError("bad number '" + s + "' in " + context);
  return v;
}

std::string resolve(const std::string& path, const std::string& base_dir) {
  namespace fs = std::filesystem;
  if (base_dir.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base_dir) / path).string();
}

Graph generated(const std::string& spec) {
  int n = -1;
  double density = -1.0;
  std::uint64_t seed = 0;
  bool weighted = false;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    const std::string key = item.substr(0, eq);
    const std::string value = eq == std::string::npos ? "" : item.substr(eq + 1);
    if (key == "n") {
      n = parse_number<int>(value, "gen:");
    } else if (key == "density") {
      density = parse_number<double>(value, "gen:");
    } else if (key == "seed") {
      seed = parse_number<std::uint64_t>(value, "gen:");
    } else if (key == "weighted" && eq == std::string::npos) {
      weighted = true;
    } else {
      throw InputError("unknown gen: field '" + item + "'");
    }
  }
  if (n < 0 || density < 0.0) throw InputError("gen: needs n= and density=");
  try {
    return random_graph(n, density, weighted, seed);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace

Graph load_graph_source(const std::string& source, const std::string& base_dir) {
  if (starts_with(source, "gen:")) return generated(source.substr(4));
  if (starts_with(source, "bench:")) {
    auto g = benchmark_instance(source.substr(6));
    if (!g) throw InputError("unknown benchmark instance '" + source.substr(6) + "'");
    return *g;
  }
  if (starts_with(source, "empty:")) {
    const int n = parse_number<int>(source.substr(6), source);
    if (n < 0) throw InputError("negative vertex count in " + source);
    return Graph(n, {});
  }
  return parse_dimacs_file(resolve(source, base_dir)).graph;
}

std::vector<BenchEntry> parse_manifest(std::istream& in) {
  std::vector<BenchEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto where = "manifest line " + std::to_string(line_no);
    std::stringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() < 2) throw InputError(where + ": expected '<name> <source> [options]'");
    BenchEntry e;
    e.name = tokens[0];
    e.source = tokens[1];
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const auto& t = tokens[i];
      if (t == "complement") {
        e.complement = true;
      } else if (starts_with(t, "weights=")) {
        e.weights = t.substr(8);
      } else if (starts_with(t, "methods=")) {
        std::stringstream ms(t.substr(8));
        for (std::string m; std::getline(ms, m, ',');) {
          const auto method = parse_method(m);
          if (!method) throw InputError(where + ": unknown method '" + m + "'");
          e.methods.push_back(*method);
        }
      } else {
        throw InputError(where + ": unknown option '" + t + "'");
      }
    }
    if (e.methods.empty()) e.methods = {Method::cp, Method::sdp_cp};
    out.push_back(std::move(e));
  }
  return out;
}

Graph load_entry(const BenchEntry& entry, const std::string& base_dir) {
  Graph g = load_graph_source(entry.source, base_dir);
  if (entry.weights) g = load_weights_file(g, resolve(*entry.weights, base_dir));
  if (entry.complement) g = complement(g);
  return g;
}

std::vector<SearchReport> run_bench(const std::vector<BenchEntry>& entries, const std::string& base_dir,
                                    const SolveConfig& base, int jobs) {
  struct Task {
    const Graph* graph;
    SolveConfig config;
  };
  std::vector<Graph> graphs;
  graphs.reserve(entries.size());
  for (const auto& e : entries) graphs.push_back(load_entry(e, base_dir));

  std::vector<Task> tasks;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (Method m : entries[i].methods) {
      SolveConfig c = base;
      c.method = m;
      c.instance = entries[i].name;
      tasks.push_back({&graphs[i], c});
    }
  }

  std::vector<SearchReport> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      reports[t] = solve_instance(*tasks[t].graph, tasks[t].config);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

BenchSummary summarize(const std::vector<SearchReport>& reports) {
  std::map<std::string, std::map<Method, double>> by_instance;
  std::vector<std::string> order;
  for (const auto& r : reports) {
    if (!r.alpha_found) continue;
    if (!by_instance.count(r.instance)) order.push_back(r.instance);
    by_instance[r.instance][r.method] = *r.alpha_found;
  }
  BenchSummary s;
  for (const auto& name : order) {
    const auto& values = by_instance[name];
    const auto cp = values.find(Method::cp);
    const auto hybrid = values.find(Method::sdp_cp);
    if (cp == values.end() || hybrid == values.end()) continue;
    ++s.instances;
    if (cp->second > hybrid->second) {
      ++s.cp_wins;
    } else if (hybrid->second > cp->second) {
      ++s.sdp_cp_wins;
    } else {
      ++s.ties;
    }
  }
  return s;
}

std::string to_string(const BenchSummary& s) {
  return "# summary: instances=" + std::to_string(s.instances) + " sdp-cp_better=" + std::to_string(s.sdp_cp_wins) +
         " cp_better=" + std::to_string(s.cp_wins) + " equal=" + std::to_string(s.ties);
}

}  // namespace theta_guide
