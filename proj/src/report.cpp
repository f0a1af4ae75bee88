#include "isw/report.hpp"

namespace isw::cli {

void validate_config(const RunConfig& cfg, bool need_n) {
  if (need_n && cfg.n < 1)
    throw ConfigError("n must be a positive integer (use --n)");
  if (cfg.n < 0) throw ConfigError("n must be a positive integer");
  if (cfg.g < 1) throw ConfigError("g must be a positive integer");
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.steps < 16) throw ConfigError("steps must be >= 16");
  if (!(cfg.tol > 0.0)) throw ConfigError("tol must be > 0");
}

namespace {

using nlohmann::ordered_json;

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  j["n"] = cfg.n;
  j["g"] = cfg.g;
  j["sign"] = cfg.sign == grassmann::Sign::plus ? "+" : "-";
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["steps"] = cfg.steps;
  j["tol"] = cfg.tol;
  j["format"] = cfg.format == Format::json ? "json" : "csv";
  j["folded_n"] = cfg.use_folded_number_operator;
  return j;
}

void flatten(const ordered_json& j, const std::string& path,
             std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j)
      flatten(value, path + "[" + std::to_string(i++) + "]", out);
  } else {
    out += path;
    out += ',';
    out += j.is_string() ? j.get<std::string>() : j.dump();
    out += '\n';
  }
}

}  // namespace

nlohmann::ordered_json Report::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["params"] = config_json(params);
  j["rows"] = rows;
  ordered_json res;
  for (const auto& [name, value] : residuals) res[name] = value;
  j["residuals"] = res;
  j["passed"] = passed;
  return j;
}

std::string Report::to_csv() const {
  std::string out = "path,value\n";
  flatten(to_json(), "", out);
  return out;
}

std::string Report::render() const {
  if (params.format == Format::csv) return to_csv();
  return to_json().dump(2) + "\n";
}

}  // namespace isw::cli
