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

// The built-in scenario suite: the anyonic state-preparation table of
// the minimal instance (vacuum, e-type creation, strings through the
// plaquette, loops, and the interference procedure), the braiding
// global-phase check, the photonic GHZ source chain, and the calibrated
// noisy pipeline.

#include <stdexcept>

#include "toricsim/scenario.hpp"

namespace toricsim {

namespace {

using nlohmann::json;

// The minimal instance's qubits carry labels 1..4 counter-clockwise
// around the S plaquette; grid qubit ids for those labels.
constexpr int kQubitOfLabel[5] = {-1, 0, 1, 3, 2};
// Plaquette id of the single S plaquette on the 2x2 grid.
constexpr int kMinimalS = 2;

json pauli_op(const std::string& letters, std::initializer_list<int> labels) {
  std::string s;
  std::size_t i = 0;
  for (int label : labels) {
    if (!s.empty()) s += ' ';
    s += letters[i++];
    s += std::to_string(kQubitOfLabel[label]);
  }
  return json{{"op", "pauli"}, {"string", s}};
}

json clifford_op(const std::string& gate, int label) {
  return json{{"op", "clifford"},
              {"gate", gate},
              {"qubit", kQubitOfLabel[label]}};
}

json loop_op() {
  return json{{"op", "plaquette_loop"}, {"region", json::array({kMinimalS})}};
}

// A preparation-row scenario: minimal lattice, both backends, standard
// curve + population + occupancy measurements, ideal expectations.
json table_row(const std::string& name, json ops, int phase_pi_target,
               bool anyon_on_plaquette) {
  json j;
  j["schema_version"] = 1;
  j["name"] = name;
  j["lattice"] = {{"type", "minimal"}};
  j["backend"] = "both";
  j["ops"] = std::move(ops);
  j["measure"] = {{"correlation_curve", true},
                  {"z_populations", true},
                  {"anyon_occupancy", true}};
  json expect;
  expect["phase_pi"] = {{"value", static_cast<double>(phase_pi_target)},
                        {"tol", 1e-9}};
  expect["fidelity"] = {{"value", 1.0}, {"tol", 1e-9}};
  expect["witness"] = true;
  expect["occupied"] = anyon_on_plaquette ? json::array({kMinimalS})
                                          : json::array();
  j["expect"] = std::move(expect);
  return j;
}

std::vector<std::pair<std::string, json>> make_builtins() {
  std::vector<std::pair<std::string, json>> all;

  // Vacuum state.
  {
    json j = table_row("vacuum", json::array(), 0, false);
    j["measure"]["energy"] = true;
    j["expect"]["energy"] = {{"value", -5.0}, {"tol", 1e-9}};
    all.emplace_back("vacuum", std::move(j));
  }

  // Creation of a single e-type anyon.
  for (int q = 1; q <= 4; ++q) {
    std::string name = "create_e_q" + std::to_string(q);
    all.emplace_back(
        name, table_row(name, json::array({pauli_op("Z", {q})}), 1, true));
  }

  // String passing through the plaquette.
  for (int q : {2, 3, 4}) {
    std::string name = "string_q1q" + std::to_string(q);
    all.emplace_back(
        name, table_row(name, json::array({pauli_op("ZZ", {1, q})}), 0,
                        false));
  }

  // String through the populated plaquette, |e> = Z(label 1) |vac>.
  for (auto [a, b] : {std::pair{2, 4}, std::pair{3, 4}, std::pair{1, 4}}) {
    std::string name =
        "anyon_string_q" + std::to_string(a) + "q" + std::to_string(b);
    all.emplace_back(name,
                     table_row(name,
                               json::array({pauli_op("Z", {1}),
                                            pauli_op("ZZ", {a, b})}),
                               1, true));
  }

  // Loop around the unpopulated plaquette: C_s |vac>.
  all.emplace_back("loop_vacuum",
                   table_row("loop_vacuum", json::array({loop_op()}), 0,
                             false));

  // Loop around the populated plaquette, then annihilation:
  // Z4 C_s Z4 |vac> = -|vac>.
  all.emplace_back("loop_annihilate_q4",
                   table_row("loop_annihilate_q4",
                             json::array({pauli_op("Z", {4}), loop_op(),
                                          pauli_op("Z", {4})}),
                             0, false));

  // Interference procedure: (s^z)^{1/2} C_s (s^z)^{-1/2} |vac>.
  for (int q = 1; q <= 4; ++q) {
    std::string name = "interference_q" + std::to_string(q);
    all.emplace_back(name,
                     table_row(name,
                               json::array({clifford_op("Sdg", q), loop_op(),
                                            clifford_op("S", q)}),
                               1, true));
  }

  // Alternative path: superposition made on one qubit, removed on
  // another: (s^z_1)^{1/2} C_s (s^z_3)^{-1/2} |vac>.
  all.emplace_back("alt_path",
                   table_row("alt_path",
                             json::array({clifford_op("Sdg", 3), loop_op(),
                                          clifford_op("S", 1)}),
                             1, true));

  // Braiding global phase: loop around one e anyon flips the sign of
  // the wave function.
  {
    json j;
    j["schema_version"] = 1;
    j["name"] = "braiding_global_phase";
    j["lattice"] = {{"type", "minimal"}};
    j["backend"] = "statevector";
    j["ops"] = json::array({pauli_op("Z", {1})});
    j["measure"] = {{"global_phase_check", {{"ops", json::array({loop_op()})}}}};
    j["expect"] = {{"global_phase", {{"real", -1.0}, {"tol", 1e-10}}}};
    all.emplace_back("braiding_global_phase", std::move(j));
  }

  // The photonic source: SPDC + HWP + PBS + two BSs, post-selected.
  {
    json j;
    j["schema_version"] = 1;
    j["name"] = "ghz_source";
    j["lattice"] = {{"type", "minimal"}};
    j["backend"] = "statevector";
    j["optics"] = {
        {"weighting", "as_written"},
        {"chain",
         json::array(
             {json{{"element", "HWP"}, {"mode", "b"}, {"angle_deg", 22.5}},
              json{{"element", "PBS"},
                   {"in", json::array({"a", "b"})},
                   {"out", json::array({"a", "b"})}},
              json{{"element", "BS"},
                   {"in", json::array({"a", "2"})},
                   {"out", json::array({"1", "2"})}},
              json{{"element", "BS"},
                   {"in", json::array({"b", "4"})},
                   {"out", json::array({"3", "4"})}}})}};
    j["ops"] = json::array();
    j["measure"] = {{"correlation_curve", true}, {"z_populations", true}};
    j["expect"] = {{"phase_pi", {{"value", 0.0}, {"tol", 1e-9}}},
                   {"fidelity", {{"value", 1.0}, {"tol", 1e-9}}},
                   {"witness", true}};
    all.emplace_back("ghz_source", std::move(j));
  }

  // The calibrated noisy pipeline reproducing the reference visibility,
  // populations and fidelity.
  {
    json j;
    j["schema_version"] = 1;
    j["name"] = "vacuum_noisy_calibrated";
    j["lattice"] = {{"type", "minimal"}};
    j["backend"] = "statevector";
    j["ops"] = json::array();
    j["measure"] = {{"correlation_curve", true}, {"z_populations", true}};
    j["noise"] = {{"config", "calibrated"}};
    j["sampling"] = {{"events_per_setting", 20000},
                     {"seed", 7},
                     {"bootstrap_resamples", 200}};
    j["expect"] = {
        {"visibility", {{"value", 0.683}, {"tol", 0.015}}},
        {"fidelity", {{"value", 0.7455}, {"tol", 0.01}}},
        {"witness", true},
        {"populations",
         {{"HHHH", {{"value", 0.412}, {"tol", 0.02}}},
          {"VVVV", {{"value", 0.396}, {"tol", 0.02}}}}}};
    all.emplace_back("vacuum_noisy_calibrated", std::move(j));
  }

  return all;
}

const std::vector<std::pair<std::string, json>>& builtins() {
  static const auto all = make_builtins();
  return all;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, j] : builtins()) names.push_back(name);
  return names;
}

bool is_builtin(const std::string& name) {
  for (const auto& [n, j] : builtins()) {
    if (n == name) return true;
  }
  return false;
}

json builtin_scenario_json(const std::string& name) {
  for (const auto& [n, j] : builtins()) {
    if (n == name) return j;
  }
  throw ScenarioError("unknown builtin scenario: " + name);
}

}  // namespace toricsim
