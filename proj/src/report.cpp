// SPDX-License-Identifier: Apache-2.0
#include "qvt/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "qvt/constants.hpp"
#include "qvt/error.hpp"
#include "qvt/version.hpp"

namespace qvt {

namespace {

std::string fixed17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

}  // namespace

bool Report::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void Report::add_check(const std::string& name, double value,
                       double tolerance, bool ok) {
  checks.push_back({name, value, tolerance, ok});
}

std::vector<std::pair<std::string, double>> constants_table() {
  return {{"c_m_per_s", constants::c},
          {"hbar_J_s", constants::hbar},
          {"elementary_charge_C", constants::elementary_charge},
          {"electron_mass_kg", constants::electron_mass}};
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "qvthrust";
  j["version"] = version;
  j["scenario"]["name"] = scenario_name;
  j["scenario"]["subcommand"] = subcommand;
  auto& params = j["scenario"]["parameters"];
  params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  auto& consts = j["constants"];
  consts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : constants) consts[k] = v;
  if (!conversions.empty()) {
    auto& conv = j["conversions"];
    conv = nlohmann::ordered_json::object();
    for (const auto& [k, v] : conversions) conv[k] = v;
  }
  auto& res = j["results"];
  res = nlohmann::ordered_json::object();
  for (const auto& [k, v] : scalars) res[k] = v;
  for (const auto& [k, v] : labels) res[k] = v;
  for (const auto& t : tables) {
    nlohmann::ordered_json jt;
    jt["columns"] = t.columns;
    jt["rows"] = t.rows;
    res[t.name] = jt;
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["value"] = c.value;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    j["checks"].push_back(jc);
  }
  j["pass"] = pass();
  return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::string out;
  out += "# tool,qvthrust\n";
  out += std::string("# version,") + version + "\n";
  out += "# scenario," + scenario_name + "\n";
  out += "# subcommand," + subcommand + "\n";
  for (const auto& [k, v] : parameters) {
    out += "# param," + k + "," + v + "\n";
  }
  for (const auto& [k, v] : constants) {
    out += "# constant," + k + "," + fixed17(v) + "\n";
  }
  for (const auto& [k, v] : conversions) {
    out += "# conversion," + k + "," + fixed17(v) + "\n";
  }
  for (const auto& [k, v] : scalars) {
    out += "result," + k + "," + fixed17(v) + "\n";
  }
  for (const auto& [k, v] : labels) {
    out += "result," + k + "," + v + "\n";
  }
  for (const auto& t : tables) {
    out += "table," + t.name;
    for (const auto& c : t.columns) out += "," + c;
    out += "\n";
    for (const auto& row : t.rows) {
      out += "row," + t.name;
      for (double v : row) out += "," + fixed17(v);
      out += "\n";
    }
  }
  for (const auto& c : checks) {
    out += "check," + c.name + "," + fixed17(c.value) + "," +
           fixed17(c.tolerance) + "," + (c.pass ? "true" : "false") + "\n";
  }
  out += std::string("summary,pass,") + (pass() ? "true" : "false") + "\n";
  return out;
}

std::string Report::serialize(const std::string& format) const {
  if (format == "json") return to_json();
  if (format == "csv") return to_csv();
  throw Error(ErrorCode::schema, "unknown report format: " + format);
}

}  // namespace qvt
