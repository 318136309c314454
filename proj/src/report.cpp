#include "theta_guide/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace theta_guide {

using nlohmann::json;

std::string to_string(Method m) {
  switch (m) {
    case Method::cp: return "cp";
    case Method::sdp_cp: return "sdp-cp";
    case Method::theta: return "theta";
  }
  return "?";
}

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::optimal: return "optimal";
    case RunStatus::time_limit: return "time_limit";
    case RunStatus::degraded: return "degraded";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& s) {
  if (s == "cp") return Method::cp;
  if (s == "sdp-cp") return Method::sdp_cp;
  if (s == "theta") return Method::theta;
  return std::nullopt;
}

std::optional<RunStatus> parse_status(const std::string& s) {
  if (s == "optimal") return RunStatus::optimal;
  if (s == "time_limit") return RunStatus::time_limit;
  if (s == "degraded") return RunStatus::degraded;
  return std::nullopt;
}

namespace {

json number(double v) {
  if (std::isfinite(v) && v == std::trunc(v) && std::fabs(v) < 9007199254740992.0) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, const char* what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

template <class Int>
Int parse_int(const std::string& s, const char* what) {
  Int v{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_json(const SearchReport& r, const JsonOptions& options) {
  json j;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["m"] = r.m;
  j["density"] = r.density;
  j["method"] = to_string(r.method);
  if (r.alpha_found) j["alpha_found"] = number(*r.alpha_found);
  j["proven"] = r.proven;
  if (r.best_discrepancy) j["best_discrepancy"] = *r.best_discrepancy;
  if (r.sdp_time) j["sdp_time"] = options.timings ? json(*r.sdp_time) : json(nullptr);
  j["total_time"] = options.timings ? json(r.total_time) : json(nullptr);
  j["time_limit_hit"] = r.time_limit_hit;
  j["backtracks"] = r.backtracks;
  if (r.theta) j["theta"] = *r.theta;
  j["seed"] = r.seed;
  j["status"] = to_string(r.status);
  j["solution"] = r.solution;
  return j.dump(options.indent);
}

SearchReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    SearchReport r;
    r.instance = j.at("instance").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.density = j.at("density").get<double>();
    const auto method = parse_method(j.at("method").get<std::string>());
    if (!method) throw std::invalid_argument("unknown method");
    r.method = *method;
    if (j.contains("alpha_found")) r.alpha_found = j["alpha_found"].get<double>();
    r.proven = j.at("proven").get<bool>();
    if (j.contains("best_discrepancy")) r.best_discrepancy = j["best_discrepancy"].get<int>();
    if (j.contains("sdp_time")) r.sdp_time = j["sdp_time"].is_null() ? 0.0 : j["sdp_time"].get<double>();
    r.total_time = j.at("total_time").is_null() ? 0.0 : j["total_time"].get<double>();
    r.time_limit_hit = j.at("time_limit_hit").get<bool>();
    r.backtracks = j.at("backtracks").get<long long>();
    if (j.contains("theta")) r.theta = j["theta"].get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    const auto status = parse_status(j.at("status").get<std::string>());
    if (!status) throw std::invalid_argument("unknown status");
    r.status = *status;
    r.solution = j.at("solution").get<std::vector<int>>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string csv_header() {
  return "instance,n,m,density,alpha,method,best_discr,sdp_time,total_time,backtracks,proven,theta,seed,status,"
         "elapsed,solution";
}

std::string to_csv(const SearchReport& r) {
  std::string solution;
  for (std::size_t i = 0; i < r.solution.size(); ++i) {
    if (i) solution += ' ';
    solution += std::to_string(r.solution[i]);
  }
  std::vector<std::string> fields;
  auto field = [&](std::string v) { fields.push_back(std::move(v)); };
  field(quote_csv(r.instance));
  field(std::to_string(r.n));
  field(std::to_string(r.m));
  field(format_double(r.density));
  field(r.alpha_found ? format_double(*r.alpha_found) : "");
  field(to_string(r.method));
  field(r.best_discrepancy ? std::to_string(*r.best_discrepancy) : "");
  field(r.sdp_time ? format_double(*r.sdp_time) : "");
  field(r.time_limit_hit ? "limit" : format_double(r.total_time));
  field(std::to_string(r.backtracks));
  field(r.proven ? "true" : "false");
  field(r.theta ? format_double(*r.theta) : "");
  field(std::to_string(r.seed));
  field(to_string(r.status));
  field(format_double(r.total_time));
  field(solution);
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV record");
  out.push_back(std::move(cur));
  return out;
}

SearchReport report_from_csv(const std::string& line) {
  const auto f = split_csv(line);
  if (f.size() != 16) throw std::invalid_argument("expected 16 CSV fields, got " + std::to_string(f.size()));
  SearchReport r;
  r.instance = f[0];
  r.n = parse_int<int>(f[1], "n");
  r.m = parse_int<int>(f[2], "m");
  r.density = parse_double(f[3], "density");
  if (!f[4].empty()) r.alpha_found = parse_double(f[4], "alpha");
  const auto method = parse_method(f[5]);
  if (!method) throw std::invalid_argument("unknown method '" + f[5] + "'");
  r.method = *method;
  if (!f[6].empty()) r.best_discrepancy = parse_int<int>(f[6], "best_discr");
  if (!f[7].empty()) r.sdp_time = parse_double(f[7], "sdp_time");
  r.time_limit_hit = f[8] == "limit";
  r.backtracks = parse_int<long long>(f[9], "backtracks");
  if (f[10] != "true" && f[10] != "false") throw std::invalid_argument("bad proven: '" + f[10] + "'");
  r.proven = f[10] == "true";
  if (!f[11].empty()) r.theta = parse_double(f[11], "theta");
  r.seed = parse_int<std::uint64_t>(f[12], "seed");
  const auto status = parse_status(f[13]);
  if (!status) throw std::invalid_argument("unknown status '" + f[13] + "'");
  r.status = *status;
  r.total_time = parse_double(f[14], "elapsed");
  std::size_t pos = 0;
  const std::string& sol = f[15];
  while (pos < sol.size()) {
    const auto next = sol.find(' ', pos);
    const auto token = sol.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    r.solution.push_back(parse_int<int>(token, "solution"));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return r;
}

}  // namespace theta_guide
