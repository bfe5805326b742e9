// SPDX-License-Identifier: Apache-2.0
#include "qvt/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qvt/error.hpp"

namespace qvt {

namespace {

enum class ValueType { real, integer, boolean, text, vec3, real_list,
                       int_list };

struct KeySpec {
  ValueType type;
  bool required = false;
  const char* default_value = nullptr;  // textual, parsed like file input
};

using Schema = std::map<std::string, KeySpec>;

const Schema& schema_for(Subcommand sub) {
  static const Schema common = {
      {"name", {ValueType::text, true, nullptr}},
      {"output", {ValueType::text, false, nullptr}},
      {"format", {ValueType::text, false, "json"}},
  };
  auto with_common = [](Schema s) {
    for (const auto& [k, v] : common) s.emplace(k, v);
    return s;
  };

  static const Schema drift = with_common({
      {"e_field", {ValueType::vec3, true}},
      {"b_field", {ValueType::vec3, true}},
      {"expect_v", {ValueType::vec3, false}},
      {"tolerance", {ValueType::real, false, "1e-12"}},
  });
  static const Schema boost = with_common({
      {"e_field", {ValueType::vec3, true}},
      {"b_field", {ValueType::vec3, true}},
      {"speed", {ValueType::real, true}},
      {"axis", {ValueType::vec3, true}},
      {"tolerance", {ValueType::real, false, "1e-12"}},
  });
  static const Schema colinear = with_common({
      {"e_field", {ValueType::vec3, false}},
      {"b_field", {ValueType::vec3, false}},
      {"random_trials", {ValueType::integer, false, "0"}},
      {"seed", {ValueType::integer, false, "1"}},
      {"cross_tolerance", {ValueType::real, false, "1e-10"}},
      {"invariant_tolerance", {ValueType::real, false, "1e-12"}},
  });
  static const Schema push = with_common({
      {"e_field", {ValueType::vec3, true}},
      {"b_field", {ValueType::vec3, true}},
      {"particle", {ValueType::text, false, "electron"}},
      {"charge", {ValueType::real, false}},
      {"mass", {ValueType::real, false}},
      {"x0", {ValueType::vec3, false, "0,0,0"}},
      {"v0", {ValueType::vec3, false, "0,0,0"}},
      {"steps_per_period", {ValueType::integer, false, "512"}},
      {"periods", {ValueType::integer, false, "32"}},
      {"drift_tolerance", {ValueType::real, false, "0.01"}},
      {"compare_charge_sign", {ValueType::boolean, false, "false"}},
      {"species_tolerance", {ValueType::real, false, "1e-3"}},
  });
  static const Schema schwinger = with_common({
      {"e_field_magnitude", {ValueType::real, true}},
      {"particle", {ValueType::text, false, "electron"}},
      {"mass", {ValueType::real, false}},
      {"charge", {ValueType::real, false}},
      {"kmax", {ValueType::integer, false, "20"}},
      {"expect_zero", {ValueType::boolean, false, "false"}},
      {"expect_ratio", {ValueType::real, false}},
      {"ratio_tolerance", {ValueType::real, false, "1e-4"}},
  });
  static const Schema thruster = with_common({
      {"mdot", {ValueType::real, true}},
      {"v_min", {ValueType::real, true}},
      {"v_max", {ValueType::real, true}},
      {"v_count", {ValueType::integer, false, "50"}},
      {"spacing", {ValueType::text, false, "log"}},
  });
  static const Schema modes = with_common({
      {"mode", {ValueType::text, true}},
      {"qe", {ValueType::real, false}},
      {"qb", {ValueType::real, false}},
      {"e_si", {ValueType::real, false}},
      {"b_si", {ValueType::real, false}},
      {"mass", {ValueType::real, false, "0"}},
      {"n_list", {ValueType::int_list, false, "0"}},
      {"kx", {ValueType::real, false, "0"}},
      {"ky", {ValueType::real, false, "0"}},
      {"tau_min", {ValueType::real, false, "-10"}},
      {"tau_max", {ValueType::real, false, "10"}},
      {"tau_count", {ValueType::integer, false, "81"}},
      {"t", {ValueType::real, false, "0"}},
      {"z", {ValueType::real, false, "0"}},
      {"step", {ValueType::real, false, "0.01"}},
      {"wronskian_tolerance", {ValueType::real, false, "1e-8"}},
      {"residual_tolerance", {ValueType::real, false, "1e-6"}},
      {"n_pairs_max", {ValueType::integer, false, "20"}},
      {"ortho_tolerance", {ValueType::real, false, "1e-10"}},
      {"n_terms", {ValueType::integer, false, "200"}},
      {"completeness_tolerance", {ValueType::real, false, "1e-3"}},
  });
  static const Schema vev = with_common({
      {"operator", {ValueType::text, true}},
      {"component", {ValueType::text, true}},
      {"qe", {ValueType::real, false, "1"}},
      {"qb", {ValueType::real, false, "1"}},
      {"mass", {ValueType::real, false, "0"}},
      {"n_max", {ValueType::integer, false, "4"}},
      {"cut", {ValueType::real, false, "8"}},
      {"quadrature_points", {ValueType::integer, false, "64"}},
      {"upper_scale", {ValueType::real, false, "1"}},
      {"tolerance", {ValueType::real, false, "1e-8"}},
      {"expect_nonzero", {ValueType::boolean, false, "false"}},
      {"nonzero_min_ratio", {ValueType::real, false, "1e-4"}},
  });

  switch (sub) {
    case Subcommand::drift: return drift;
    case Subcommand::boost: return boost;
    case Subcommand::colinear: return colinear;
    case Subcommand::push: return push;
    case Subcommand::schwinger: return schwinger;
    case Subcommand::thruster: return thruster;
    case Subcommand::modes: return modes;
    case Subcommand::vev: return vev;
  }
  throw Error(ErrorCode::schema, "unknown subcommand");
}

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  auto end = s.find_last_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& raw, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::schema,
                "key '" + key + "': cannot parse real from '" + raw + "'");
  }
}

long parse_int(const std::string& raw, const std::string& key) {
  try {
    std::size_t used = 0;
    const long v = std::stol(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::schema,
                "key '" + key + "': cannot parse integer from '" + raw + "'");
  }
}

std::vector<std::string> split_commas(const std::string& raw) {
  std::vector<std::string> parts;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  return parts;
}

ScenarioValue parse_value(ValueType type, const std::string& raw,
                          const std::string& key) {
  switch (type) {
    case ValueType::real:
      return parse_real(raw, key);
    case ValueType::integer:
      return parse_int(raw, key);
    case ValueType::boolean:
      if (raw == "true") return true;
      if (raw == "false") return false;
      throw Error(ErrorCode::schema,
                  "key '" + key + "': expected true/false, got '" + raw + "'");
    case ValueType::text:
      return raw;
    case ValueType::vec3: {
      const auto parts = split_commas(raw);
      if (parts.size() != 3) {
        throw Error(ErrorCode::schema,
                    "key '" + key + "': expected three comma components");
      }
      return Vec3{parse_real(parts[0], key), parse_real(parts[1], key),
                  parse_real(parts[2], key)};
    }
    case ValueType::real_list: {
      std::vector<double> out;
      for (const auto& p : split_commas(raw)) out.push_back(parse_real(p, key));
      return out;
    }
    case ValueType::int_list: {
      std::vector<long> out;
      for (const auto& p : split_commas(raw)) out.push_back(parse_int(p, key));
      return out;
    }
  }
  throw Error(ErrorCode::schema, "unhandled value type");
}

Subcommand subcommand_from(const std::string& s) {
  static const std::map<std::string, Subcommand> names = {
      {"drift", Subcommand::drift},       {"boost", Subcommand::boost},
      {"colinear", Subcommand::colinear}, {"push", Subcommand::push},
      {"schwinger", Subcommand::schwinger},
      {"thruster", Subcommand::thruster}, {"modes", Subcommand::modes},
      {"vev", Subcommand::vev}};
  const auto it = names.find(s);
  if (it == names.end()) {
    throw Error(ErrorCode::config_parse, "unknown section [" + s + "]");
  }
  return it->second;
}

}  // namespace

const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::drift: return "drift";
    case Subcommand::boost: return "boost";
    case Subcommand::colinear: return "colinear";
    case Subcommand::push: return "push";
    case Subcommand::schwinger: return "schwinger";
    case Subcommand::thruster: return "thruster";
    case Subcommand::modes: return "modes";
    case Subcommand::vev: return "vev";
  }
  return "?";
}

Scenario parse_scenario(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_section = false;
  Subcommand sub = Subcommand::drift;
  std::map<std::string, std::string> raw;

  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw Error(ErrorCode::config_parse,
                    "line " + std::to_string(line_no) + ": unterminated section");
      }
      if (have_section) {
        throw Error(ErrorCode::config_parse,
                    "line " + std::to_string(line_no) +
                        ": a scenario holds exactly one section");
      }
      sub = subcommand_from(trim(line.substr(1, line.size() - 2)));
      have_section = true;
      continue;
    }
    if (!have_section) {
      throw Error(ErrorCode::config_parse,
                  "line " + std::to_string(line_no) +
                      ": expected a [subcommand] section header first");
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::config_parse,
                  "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw Error(ErrorCode::config_parse,
                  "line " + std::to_string(line_no) + ": empty key");
    }
    if (raw.count(key)) {
      throw Error(ErrorCode::config_parse,
                  "line " + std::to_string(line_no) + ": duplicate key '" +
                      key + "'");
    }
    raw[key] = value;
  }
  if (!have_section) {
    throw Error(ErrorCode::config_parse, "no [subcommand] section found");
  }

  const Schema& schema = schema_for(sub);
  Scenario scn;
  scn.subcommand = sub;

  for (const auto& [key, value] : raw) {
    const auto it = schema.find(key);
    if (it == schema.end()) {
      throw Error(ErrorCode::schema,
                  std::string("unknown key '") + key + "' for [" +
                      subcommand_name(sub) + "]");
    }
    scn.parameters[key] = parse_value(it->second.type, value, key);
  }
  for (const auto& [key, spec] : schema) {
    if (scn.parameters.count(key)) continue;
    if (spec.required) {
      throw Error(ErrorCode::schema,
                  std::string("missing required key '") + key + "' for [" +
                      subcommand_name(sub) + "]");
    }
    if (spec.default_value != nullptr) {
      scn.parameters[key] = parse_value(spec.type, spec.default_value, key);
    }
  }

  scn.name = scn.text("name");
  if (scn.has("output")) scn.output_path = scn.text("output");
  scn.output_format = scn.text("format");
  if (scn.output_format != "json" && scn.output_format != "csv") {
    throw Error(ErrorCode::schema, "format must be json or csv");
  }
  return scn;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io, "cannot open scenario file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

namespace {

template <typename T>
const T& fetch(const Scenario& s, const std::string& key) {
  const auto it = s.parameters.find(key);
  if (it == s.parameters.end()) {
    throw Error(ErrorCode::schema, "parameter '" + key + "' not present");
  }
  const T* v = std::get_if<T>(&it->second);
  if (v == nullptr) {
    throw Error(ErrorCode::schema, "parameter '" + key + "' has wrong type");
  }
  return *v;
}

}  // namespace

double Scenario::real(const std::string& key) const {
  return fetch<double>(*this, key);
}
long Scenario::integer(const std::string& key) const {
  return fetch<long>(*this, key);
}
bool Scenario::boolean(const std::string& key) const {
  return fetch<bool>(*this, key);
}
const std::string& Scenario::text(const std::string& key) const {
  return fetch<std::string>(*this, key);
}
Vec3 Scenario::vec3(const std::string& key) const {
  return fetch<Vec3>(*this, key);
}
const std::vector<double>& Scenario::real_list(const std::string& key) const {
  return fetch<std::vector<double>>(*this, key);
}
const std::vector<long>& Scenario::int_list(const std::string& key) const {
  return fetch<std::vector<long>>(*this, key);
}
bool Scenario::has(const std::string& key) const {
  return parameters.count(key) != 0;
}

}  // namespace qvt
