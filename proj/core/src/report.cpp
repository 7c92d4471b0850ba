#include "qm/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

namespace qm {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(const std::string& path, const SumReport& rep) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "x,exact,predicted,ratio,abs_err\n";
  for (const SumPoint& p : rep.points)
    out << fmt_double(p.x) << ',' << p.exact << ',' << fmt_double(p.predicted) << ','
        << fmt_double(p.ratio) << ',' << fmt_double(p.abs_err) << '\n';
  if (!out) throw IoError("write failed for '" + path + "'");
}

nlohmann::ordered_json report_json(const RunConfig& config, const SumReport& rep) {
  nlohmann::ordered_json j;
  j["config"] = config_json(config);

  nlohmann::ordered_json results;
  results["kind"] = sum_kind_name(rep.kind);
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const SumPoint& p : rep.points) {
    nlohmann::ordered_json pj;
    pj["x"] = p.x;
    pj["exact"] = p.exact;
    pj["predicted"] = p.predicted;
    pj["ratio"] = p.ratio;
    pj["abs_err"] = p.abs_err;
    points.push_back(pj);
  }
  results["points"] = points;
  results["fitted_error_exponent"] = rep.fit.slope;
  results["fitted_error_exponent_half_width"] = rep.fit.half_width;
  results["fit_points_used"] = rep.fit.points_used;
  results["ratio_tolerance"] = rep.ratio_tolerance;
  results["pass"] = rep.pass;
  results["shifted_zero_term"] = rep.shifted_zero_term;
  if (rep.kind == SumKind::mirsky || rep.kind == SumKind::normalized_mirsky) {
    results["constant"] = rep.constant_value;
    results["constant_prime_cutoff"] = rep.constant_cutoff;
  }
  j["results"] = results;

  nlohmann::ordered_json meta;
  auto now = std::chrono::system_clock::now().time_since_epoch();
  meta["timestamp_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
  double total = 0;
  nlohmann::ordered_json secs = nlohmann::ordered_json::array();
  for (const SumPoint& p : rep.points) {
    secs.push_back(p.seconds);
    total += p.seconds;
  }
  meta["runtime_seconds_per_point"] = secs;
  meta["runtime_seconds"] = total;
  meta["threads"] = thread_count();
  j["metadata"] = meta;
  return j;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace qm
