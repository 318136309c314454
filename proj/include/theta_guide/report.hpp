#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace theta_guide {

enum class Method { cp, sdp_cp, theta };
enum class RunStatus { optimal, time_limit, degraded };

std::string to_string(Method m);
std::string to_string(RunStatus s);
std::optional<Method> parse_method(const std::string& s);
std::optional<RunStatus> parse_status(const std::string& s);

/// One row of a results table.
struct SearchReport {
  std::string instance;
  int n = 0;
  int m = 0;
  double density = 0.0;
  Method method = Method::cp;
  std::optional<double> alpha_found;    // absent for method theta
  bool proven = false;
  std::optional<int> best_discrepancy;  // LDS runs only
  std::optional<double> sdp_time;       // absent when no SDP was solved
  double total_time = 0.0;
  bool time_limit_hit = false;
  long long backtracks = 0;
  std::optional<double> theta;
  std::uint64_t seed = 0;
  RunStatus status = RunStatus::optimal;
  std::vector<int> solution;  // 1-based vertex labels

  bool operator==(const SearchReport&) const = default;
};

struct JsonOptions {
  bool timings = true;  // false writes null for sdp_time and total_time
  int indent = 2;
};

std::string to_json(const SearchReport& r, const JsonOptions& options = {});
/// Throws std::invalid_argument on malformed input.
SearchReport report_from_json(const std::string& text);

/// Column order: instance, n, m, density, alpha, method, best_discr,
/// sdp_time, total_time, backtracks, proven, theta, seed, status,
/// elapsed, solution. total_time reads "limit" for runs stopped by the
/// clock; elapsed always holds the measured seconds.
std::string csv_header();
std::string to_csv(const SearchReport& r);
SearchReport report_from_csv(const std::string& line);

/// Splits one CSV record, honoring double-quoted fields.
std::vector<std::string> split_csv(const std::string& line);

}  // namespace theta_guide
