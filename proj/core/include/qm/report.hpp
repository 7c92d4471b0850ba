#pragma once

#include "qm/config.hpp"
#include "qm/sums.hpp"

namespace qm {

// CSV with the fixed columns x, exact, predicted, ratio, abs_err.
void write_csv(const std::string& path, const SumReport& rep);  // IoError

// Deterministic report body: config echo plus results. Timing and other
// run-dependent values go into a separate "metadata" block so that two runs
// with the same config and seed agree byte for byte outside it.
nlohmann::ordered_json report_json(const RunConfig& config, const SumReport& rep);

void write_json(const std::string& path, const nlohmann::ordered_json& j);  // IoError

}  // namespace qm
