#include "homcount/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace homcount {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename into '" + path + "'");
}

Claim make_claim(const std::string& id, double computed, double target,
                 double tolerance, const std::string& note) {
  Claim c;
  c.id = id;
  c.computed = computed;
  c.target = target;
  c.tolerance = tolerance;
  c.verdict = std::fabs(computed - target) <= tolerance ? "pass" : "fail";
  c.note = note;
  return c;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = schema;
  nlohmann::ordered_json hdr = nlohmann::ordered_json::object();
  for (const auto& [k, v] : header) hdr[k] = v;
  j["config"] = hdr;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : claims) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["computed"] = c.computed;
    cj["target"] = c.target;
    cj["tolerance"] = c.tolerance;
    cj["verdict"] = c.verdict;
    if (!c.note.empty()) cj["note"] = c.note;
    j["claims"].push_back(cj);
  }
  return j.dump(2) + "\n";
}

TheoryComparison compare_to_theory(const CensusTable& table, double h,
                                   long long window_lo, long long window_hi,
                                   double slope_tol, double ratio_band) {
  TheoryComparison out;
  bool any_nonzero = false;
  for (const auto& [n, c] : table.entries)
    if (c > 0) any_nonzero = true;
  if (table.entries.empty() || !any_nonzero) {
    out.inconclusive = true;
    out.log_type.id = "log-type";
    out.log_type.verdict = "inconclusive";
    out.exp_type.id = "exp-type";
    out.exp_type.verdict = "inconclusive";
    return out;
  }
  for (const auto& [n, c] : table.entries) {
    if (n < window_lo || n > window_hi) continue;
    if (c > 0 && n > 0) out.log_over_n[n] = log_big(c) / n;
    out.ratio[n] = c > 0 ? std::exp(log_big(c) - n * h) : 0.0;
  }
  try {
    out.slope = growth_rate(table, window_lo, window_hi).slope;
  } catch (const std::invalid_argument&) {
    out.inconclusive = true;
    out.log_type.id = "log-type";
    out.log_type.verdict = "inconclusive";
    out.exp_type.id = "exp-type";
    out.exp_type.verdict = "inconclusive";
    return out;
  }
  out.ratio_min = 1e300;
  out.ratio_max = 0.0;
  for (const auto& [n, r] : out.ratio) {
    if (r <= 0) continue;
    out.ratio_min = std::min(out.ratio_min, r);
    out.ratio_max = std::max(out.ratio_max, r);
  }
  out.log_type = make_claim("log-type", out.slope, h, slope_tol);
  // exp-type verdict: the positive ratios stay inside a fixed band
  out.exp_type.id = "exp-type";
  out.exp_type.computed = out.ratio_max > 0 ? out.ratio_max / out.ratio_min : 0;
  out.exp_type.target = 1.0;
  out.exp_type.tolerance = ratio_band;
  out.exp_type.verdict =
      out.ratio_max > 0 && out.exp_type.computed <= 1.0 + ratio_band
          ? "pass"
          : "fail";
  return out;
}

} // namespace homcount
