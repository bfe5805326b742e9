// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qvt {

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Machine-readable run report.  Serialization is deterministic: fields
/// keep insertion order, JSON floats use the shortest round-trip form,
/// CSV floats are fixed at 17 significant digits.
struct Report {
  std::string scenario_name;
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;  // echo
  std::vector<std::pair<std::string, double>> constants;        // SI table
  std::vector<std::pair<std::string, double>> conversions;
  std::vector<std::pair<std::string, double>> scalars;
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<Table> tables;
  std::vector<Check> checks;

  bool pass() const;
  void add_check(const std::string& name, double value, double tolerance,
                 bool ok);
  std::string serialize(const std::string& format) const;  // json or csv
  std::string to_json() const;
  std::string to_csv() const;
};

/// The compiled-in constants table embedded in every report.
std::vector<std::pair<std::string, double>> constants_table();

}  // namespace qvt
