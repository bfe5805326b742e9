// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qvt/vec3.hpp"

namespace qvt {

enum class Subcommand { drift, boost, colinear, push, schwinger, thruster,
                        modes, vev };

const char* subcommand_name(Subcommand s);

using ScenarioValue = std::variant<double, long, bool, std::string, Vec3,
                                   std::vector<double>, std::vector<long>>;

/// One parsed scenario: a named subcommand plus schema-validated typed
/// parameters.  The file format is flat key = value lines under a single
/// [subcommand] section header; '#' starts a comment; vectors and lists
/// are comma separated.  Unknown keys, missing required keys and type
/// mismatches are schema errors, not warnings.
struct Scenario {
  std::string name;
  Subcommand subcommand = Subcommand::drift;
  std::map<std::string, ScenarioValue> parameters;
  std::string output_path;    // optional, from the 'output' key
  std::string output_format;  // "json" (default) or "csv"

  double real(const std::string& key) const;
  long integer(const std::string& key) const;
  bool boolean(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  Vec3 vec3(const std::string& key) const;
  const std::vector<double>& real_list(const std::string& key) const;
  const std::vector<long>& int_list(const std::string& key) const;
  bool has(const std::string& key) const;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

}  // namespace qvt
