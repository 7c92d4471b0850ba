#include "qm/config.hpp"

#include <cctype>
#include <charconv>

namespace qm {

namespace {

long parse_long(const std::string& s) {
  long out = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ConfigError("bad integer '" + s + "'");
  return out;
}

}  // namespace

Angle parse_theta(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ConfigError("empty theta");

  auto pi_pos = s.find("pi");
  if (pi_pos != std::string::npos) {
    long num = 1, den = 1;
    std::string head = s.substr(0, pi_pos);
    std::string tail = s.substr(pi_pos + 2);
    if (!head.empty()) {
      if (head.back() == '*') head.pop_back();
      if (!head.empty()) num = parse_long(head);
    }
    if (!tail.empty()) {
      if (tail.front() != '/') throw ConfigError("bad theta '" + text + "'");
      den = parse_long(tail.substr(1));
      if (den <= 0) throw ConfigError("bad theta '" + text + "'");
    }
    Angle a = angle_pi(num, den);
    if (a.num <= 0 || a.num > 2 * a.den) throw ConfigError("theta must lie in ]0, 2*pi]");
    return a;
  }

  double value = 0;
  try {
    std::size_t used = 0;
    value = std::stod(s, &used);
    if (used != s.size()) throw ConfigError("bad theta '" + text + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    throw ConfigError("bad theta '" + text + "'");
  }
  if (!(value > 0.0) || value > 6.283185307179587)
    throw ConfigError("theta must lie in ]0, 2*pi]");
  return angle_radians(value);
}

std::string format_theta(const Angle& theta) {
  if (!theta.symbolic) return std::to_string(theta.radians);
  std::string s;
  if (theta.num != 1) s += std::to_string(theta.num);
  s += "pi";
  if (theta.den != 1) s += "/" + std::to_string(theta.den);
  return s;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw ConfigError("grid must be a:b:n:log or a:b:n:lin");
  double a = 0, b = 0;
  long n = 0;
  try {
    a = std::stod(parts[0]);
    b = std::stod(parts[1]);
    n = parse_long(parts[2]);
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    throw ConfigError("bad grid '" + text + "'");
  }
  bool log_scale = parts[3] == "log";
  if (!log_scale && parts[3] != "lin") throw ConfigError("grid scale must be log or lin");
  if (!(a > 0) || !(b > a) || n < 2) throw ConfigError("bad grid '" + text + "'");
  std::vector<double> grid;
  for (long i = 0; i < n; ++i) {
    double t = double(i) / double(n - 1);
    grid.push_back(log_scale ? a * std::pow(b / a, t) : a + (b - a) * t);
  }
  return grid;
}

Element parse_anchor(const std::string& text, const Field& f) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ConfigError("anchor must be 'u,v' coordinates");
  i64 u = 0, v = 0;
  try {
    u = parse_long(text.substr(0, comma));
    v = parse_long(text.substr(comma + 1));
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    throw ConfigError("bad anchor '" + text + "'");
  }
  Element z(u, v, f);
  if (z.is_zero()) throw ConfigError("anchor must be nonzero");
  return z;
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["field"] = c.field_disc;
  j["subcommand"] = c.subcommand;
  if (!c.target.empty()) j["target"] = c.target;
  j["m"] = c.m_text;
  j["k"] = c.k_text;
  j["z"] = c.z_text;
  j["theta"] = c.theta_text;
  if (!c.grid_text.empty()) j["grid"] = c.grid_text;
  j["s"] = c.s_value;
  j["tolerance"] = c.tolerance;
  j["ratio_tolerance"] = c.ratio_tolerance;
  if (!c.out_path.empty()) j["out"] = c.out_path;
  if (!c.json_path.empty()) j["json"] = c.json_path;
  j["format"] = c.format;
  j["threads"] = c.threads;
  j["seed"] = c.seed;
  return j;
}

}  // namespace qm
