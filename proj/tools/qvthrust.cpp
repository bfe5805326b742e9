// SPDX-License-Identifier: Apache-2.0
//
// qvthrust - vacuum-field toolkit command line.
//
//   qvthrust run <scenario.scn> [--output <path>] [--format json|csv]
//   qvthrust check-all <dir>
//   qvthrust <subcommand> --set key=value [...]   (ad-hoc scenario)

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qvt/error.hpp"
#include "qvt/runner.hpp"
#include "qvt/scenario.hpp"
#include "qvt/version.hpp"

namespace {

int exit_code_for(const qvt::Error& e) {
  switch (e.code()) {
    case qvt::ErrorCode::config_parse: return 2;
    case qvt::ErrorCode::schema: return 3;
    case qvt::ErrorCode::io: return 5;
    default: return 4;  // module errors
  }
}

int emit_report(const qvt::Report& report, std::string output_path,
                std::string format) {
  const std::string text = report.serialize(format);
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      throw qvt::Error(qvt::ErrorCode::io,
                       "cannot write report to " + output_path);
    }
    out << text;
    std::cout << (report.pass() ? "PASS " : "FAIL ") << report.scenario_name
              << " -> " << output_path << "\n";
  }
  return report.pass() ? 0 : 1;
}

int run_file(const std::string& path, const std::string& output_flag,
             const std::string& format_flag) {
  const qvt::Scenario scn = qvt::load_scenario(path);
  const qvt::Report report = qvt::run_scenario(scn);
  const std::string output =
      !output_flag.empty() ? output_flag : scn.output_path;
  const std::string format =
      !format_flag.empty() ? format_flag : scn.output_format;
  return emit_report(report, output, format);
}

int run_check_all(const std::string& dir) {
  const auto outcomes = qvt::check_all(dir);
  int failed = 0;
  for (const auto& o : outcomes) {
    std::cout << (o.pass ? "PASS " : "FAIL ") << o.file << " (" << o.name
              << ")\n";
    if (!o.pass) ++failed;
  }
  std::cout << outcomes.size() - failed << " passed, " << failed
            << " failed, " << outcomes.size() << " total\n";
  return failed == 0 ? 0 : 1;
}

// Assemble a scenario from --set key=value pairs for quick direct use of
// one subcommand without a file.
int run_adhoc(const std::string& sub,
              const std::vector<std::string>& settings,
              const std::string& output_flag, const std::string& format_flag) {
  std::string text = "[" + sub + "]\n";
  bool has_name = false;
  for (const auto& kv : settings) {
    if (kv.rfind("name", 0) == 0) has_name = true;
    text += kv + "\n";
  }
  if (!has_name) text += "name = adhoc-" + sub + "\n";
  const qvt::Scenario scn = qvt::parse_scenario(text);
  const qvt::Report report = qvt::run_scenario(scn);
  const std::string output =
      !output_flag.empty() ? output_flag : scn.output_path;
  const std::string format =
      !format_flag.empty() ? format_flag : scn.output_format;
  return emit_report(report, output, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-vacuum field and thrust toolkit"};
  app.set_version_flag("--version", std::string(qvt::version));
  app.require_subcommand(1);

  std::string output_flag;
  std::string format_flag;
  app.add_option("--output", output_flag, "write the report to this path");
  app.add_option("--format", format_flag, "json or csv");

  std::string scenario_path;
  auto* run_cmd = app.add_subcommand("run", "run a scenario file");
  run_cmd->add_option("scenario", scenario_path, "scenario file")->required();
  run_cmd->fallthrough();

  std::string check_dir;
  auto* check_cmd =
      app.add_subcommand("check-all", "run every scenario in a directory");
  check_cmd->add_option("dir", check_dir, "scenario directory")->required();
  check_cmd->fallthrough();

  const std::vector<std::string> subs = {"drift", "boost", "colinear",
                                         "push", "schwinger", "thruster",
                                         "modes", "vev"};
  std::map<std::string, std::vector<std::string>> adhoc_settings;
  for (const auto& name : subs) {
    auto* cmd = app.add_subcommand(
        name, std::string("run the ") + name + " operation directly");
    cmd->add_option("--set", adhoc_settings[name],
                    "scenario key=value entries");
    cmd->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return run_file(scenario_path, output_flag, format_flag);
    }
    if (check_cmd->parsed()) {
      return run_check_all(check_dir);
    }
    for (const auto& name : subs) {
      if (app.get_subcommand(name)->parsed()) {
        return run_adhoc(name, adhoc_settings[name], output_flag,
                         format_flag);
      }
    }
  } catch (const qvt::Error& e) {
    std::cerr << "error [" << qvt::error_code_name(e.code())
              << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
