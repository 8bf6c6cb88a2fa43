// Copyright 2026 The toricsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "toricsim/scenario.hpp"

namespace {

using namespace toricsim;

#ifndef TORICSIM_DATA_DIR
#define TORICSIM_DATA_DIR "share"
#endif

Scenario load_scenario(const std::string& file, const std::string& builtin) {
  if (!builtin.empty()) {
    return Scenario::from_json(builtin_scenario_json(builtin));
  }
  return Scenario::from_file(file);
}

RunOptions make_options(const std::string& backend, bool has_seed,
                        std::uint64_t seed, const std::string& data_dir) {
  RunOptions opts;
  if (!backend.empty()) opts.backend = backend_from_name(backend);
  if (has_seed) opts.seed = seed;
  opts.data_dir = data_dir;
  return opts;
}

void print_summary(const Report& report) {
  const auto& doc = report.doc;
  std::cout << "scenario: " << doc["scenario"].get<std::string>()
            << "  backend: " << doc["backend"].get<std::string>() << "\n";
  const auto& results = doc["results"];
  if (results.contains("fit")) {
    std::printf("  visibility: %.4f   phase: %.4f pi\n",
                results["fit"]["visibility"].get<double>(),
                results["fit"]["phase_pi"].get<double>());
  }
  if (results.contains("fidelity")) {
    std::printf("  fidelity: %.4f   witness: %s\n",
                results["fidelity"].get<double>(),
                results["witness"].get<bool>() ? "genuine 4-partite"
                                               : "not certified");
  }
  if (results.contains("c_z")) {
    std::printf("  c_z: %.4f +/- %.4f\n",
                results["c_z"]["value"].get<double>(),
                results["c_z"]["stderr"].get<double>());
  }
  if (results.contains("energy")) {
    std::printf("  energy: %.6f\n", results["energy"].get<double>());
  }
  if (results.contains("global_phase")) {
    std::printf("  global phase: %.6f %+.6fi\n",
                results["global_phase"]["real"].get<double>(),
                results["global_phase"]["imag"].get<double>());
  }
  if (results.contains("source")) {
    std::printf("  source: success %.6f  fidelity to GHZ0 %.6f\n",
                results["source"]["success_probability"].get<double>(),
                results["source"]["fidelity_ghz0"].get<double>());
  }
  if (results.contains("occupied")) {
    std::cout << "  occupied plaquettes:";
    for (int id : results["occupied"].get<std::vector<int>>()) {
      std::cout << ' ' << id;
    }
    std::cout << "\n";
  }
  for (const auto& check : doc["checks"]) {
    std::cout << "  check " << check["name"].get<std::string>() << ": "
              << (check["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  }
  std::cout << (report.passed ? "PASS" : "FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric code anyon simulation toolkit"};
  app.require_subcommand(1);

  std::string file, builtin, backend, out_dir, report_path, format = "json";
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string data_dir = TORICSIM_DATA_DIR;

  auto add_common = [&](CLI::App* cmd, bool need_scenario) {
    if (need_scenario) {
      cmd->add_option("file", file, "scenario JSON file");
      cmd->add_option("--builtin", builtin, "built-in scenario name");
    }
    cmd->add_option("--backend", backend,
                    "stabilizer, statevector, or both");
    cmd->add_option("--seed", seed, "sampling seed override")
        ->each([&](const std::string&) { has_seed = true; });
    cmd->add_option("--data-dir", data_dir,
                    "directory with noise_calibrated.json");
  };

  CLI::App* run = app.add_subcommand("run", "run a scenario");
  add_common(run, true);
  run->add_option("--report", report_path, "write the report JSON here");

  CLI::App* list = app.add_subcommand("list", "list built-in scenarios");

  CLI::App* exp = app.add_subcommand(
      "export", "run a scenario and export report/curve/population files");
  add_common(exp, true);
  exp->add_option("--format", format, "json or csv")->required();
  exp->add_option("--out", out_dir, "output directory")->required();

  CLI::App* cal = app.add_subcommand(
      "calibrate", "fit the noise model to the reference values");
  std::string cal_out = std::string(TORICSIM_DATA_DIR) +
                        "/noise_calibrated.json";
  cal->add_option("--out", cal_out, "config file to write");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& name : builtin_names()) std::cout << name << "\n";
      return 0;
    }
    if (cal->parsed()) {
      CalibrationTargets targets;
      NoiseModel nm = calibrate_noise(targets);
      save_noise_config(nm, targets, cal_out);
      std::printf(
          "calibrated: white_noise=%.9f dephasing=%.9f tilt=%.9f -> %s\n",
          nm.white_noise, nm.dephasing, nm.tilt, cal_out.c_str());
      return 0;
    }
    if (file.empty() && builtin.empty()) {
      std::cerr << "error: give a scenario file or --builtin NAME\n";
      return 2;
    }
    Scenario sc = load_scenario(file, builtin);
    Report report =
        run_scenario(sc, make_options(backend, has_seed, seed, data_dir));

    if (run->parsed()) {
      print_summary(report);
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << report.doc.dump(2) << "\n";
      }
      return report.passed ? 0 : 1;
    }

    // export
    if (format != "json" && format != "csv") {
      std::cerr << "error: unknown format '" << format
                << "' (expected json or csv)\n";
      return 2;
    }
    std::filesystem::create_directories(out_dir);
    const std::string base = out_dir + "/" + sc.name;
    if (format == "json") {
      std::ofstream out(base + "_report.json");
      out << report.doc.dump(2) << "\n";
      std::cout << base + "_report.json" << "\n";
    } else {
      if (!report.curve.empty()) {
        std::ofstream out(base + "_curve.csv");
        write_curve_csv(report, out);
        std::cout << base + "_curve.csv" << "\n";
      }
      if (!report.populations.empty()) {
        std::ofstream out(base + "_populations.csv");
        write_populations_csv(report, out);
        std::cout << base + "_populations.csv" << "\n";
      }
      if (!report.count_records.empty()) {
        std::ofstream out(base + "_counts.csv");
        write_count_records_csv(out, report.count_records);
        std::cout << base + "_counts.csv" << "\n";
      }
    }
    return report.passed ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
