#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isw/grassmann.hpp"

namespace isw::cli {

enum class Format { json, csv };

// One invocation's knobs. Identical configs must render byte-identical
// reports, so everything that influences output lives here.
struct RunConfig {
  int n = 0;  // 0 = not supplied; commands that need it reject 0
  int g = 2;
  grassmann::Sign sign = grassmann::Sign::plus;
  std::uint64_t seed = 1;
  int trials = 100;
  int steps = 200000;
  double tol = 1e-10;
  Format format = Format::json;
  bool use_folded_number_operator = false;
};

// Raised for invalid configuration; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// need_n: every command except verify-all requires an explicit n.
void validate_config(const RunConfig& cfg, bool need_n);

struct Report {
  std::string command;
  RunConfig params;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::vector<std::pair<std::string, double>> residuals;
  bool passed = true;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
  // JSON or CSV per params.format, with trailing newline.
  std::string render() const;
};

}  // namespace isw::cli
