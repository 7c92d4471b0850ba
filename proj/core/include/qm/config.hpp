#pragma once

#include "qm/sector.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qm {

// "2pi", "pi", "pi/3", "3pi/4", or a plain decimal in radians.
Angle parse_theta(const std::string& text);
std::string format_theta(const Angle& theta);

// "a:b:n:log" or "a:b:n:lin".
std::vector<double> parse_grid(const std::string& text);

// Fully serialized run description; a run is reproducible from its config
// and seed.
struct RunConfig {
  int field_disc{-4};
  std::string subcommand;
  std::string target;  // verify target identifier
  std::string m_text{"1"};
  std::string k_text{"0"};
  std::string z_text{"1,0"};
  std::string theta_text{"2pi"};
  std::string grid_text;
  double s_value{2.0};
  double tolerance{1e-6};
  double ratio_tolerance{0.05};
  std::string out_path;
  std::string json_path;
  std::string format{"csv"};
  unsigned threads{0};  // 0: QM_THREADS / hardware
  u64 seed{1};
};

nlohmann::ordered_json config_json(const RunConfig& c);

// "u,v" coordinates of an exact anchor.
Element parse_anchor(const std::string& text, const Field& f);

}  // namespace qm
