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

#ifndef TORICSIM_SCENARIO_HPP
#define TORICSIM_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "toricsim/experiment.hpp"
#include "toricsim/fock.hpp"
#include "toricsim/lattice.hpp"
#include "toricsim/stabilizer.hpp"
#include "toricsim/statevector.hpp"

namespace toricsim {

enum class Backend { Stabilizer, Statevector, Both };
Backend backend_from_name(std::string_view name);
std::string_view backend_name(Backend b);

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioOp {
  enum class Kind { Pauli, Clifford, Loop, String } kind;
  PauliString pauli = PauliString(1);  // resolved operator for Pauli ops
  Gate1 gate = Gate1::Z;
  int qubit = 0;
  std::vector<int> region;  // Loop: S plaquette ids
  AnyonKind string_kind = AnyonKind::E;
  int from = 0, to = 0;  // String endpoints
};

struct Measurements {
  std::optional<std::vector<double>> correlation_gammas;
  bool z_populations = false;
  bool anyon_occupancy = false;
  bool energy = false;
  std::optional<std::vector<ScenarioOp>> global_phase_ops;
};

struct NoiseSpec {
  std::optional<NoiseModel> model;   // inline parameters
  std::optional<std::string> config;  // "calibrated" or a file path
};

struct SamplingSpec {
  std::uint64_t events_per_setting = 0;
  std::uint64_t seed = 0;
  int bootstrap_resamples = 1000;
};

struct OpticsSpec {
  SpdcWeighting weighting = SpdcWeighting::as_written;
  std::vector<Element> chain;
};

struct ValueTol {
  double value = 0.0;
  double tol = 0.0;
};

struct Expectations {
  std::optional<ValueTol> phase_pi;  // in units of pi
  std::optional<ValueTol> visibility;
  std::optional<ValueTol> fidelity;
  std::optional<bool> witness;
  std::optional<ValueTol> global_phase_real;
  std::optional<std::vector<int>> occupied;
  std::optional<ValueTol> energy;
  std::optional<std::vector<std::pair<std::string, ValueTol>>> populations;
};

/// A declarative experiment script: lattice, backend, preparation ops,
/// measurements, optional noise/sampling, and self-checking expected
/// values. Schema version 1.
struct Scenario {
  std::string name;
  nlohmann::json lattice_desc;
  ToricLattice lattice = ToricLattice::minimal();
  Backend backend = Backend::Both;
  std::vector<ScenarioOp> ops;
  Measurements measure;
  std::optional<NoiseSpec> noise;
  std::optional<SamplingSpec> sampling;
  std::optional<OpticsSpec> optics;
  Expectations expect;

  static Scenario from_json(const nlohmann::json& j);
  static Scenario from_file(const std::string& path);
};

struct RunOptions {
  std::optional<Backend> backend;
  std::optional<std::uint64_t> seed;
  /// Directory holding noise_calibrated.json; defaults to the shipped
  /// share/ directory.
  std::string data_dir;
};

struct Report {
  nlohmann::ordered_json doc;
  bool passed = true;
  std::vector<std::array<double, 3>> curve;  // gamma, value, stderr
  std::vector<std::pair<std::string, double>> populations;
  std::vector<CountRecord> count_records;  // sampled runs only
};

Report run_scenario(const Scenario& scenario, const RunOptions& opts = {});

/// Z-basis outcome label, one character per qubit 0..3 (H = 0, V = 1).
std::string outcome_label(int index);

void write_curve_csv(const Report& report, std::ostream& out);
void write_populations_csv(const Report& report, std::ostream& out);

std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
nlohmann::json builtin_scenario_json(const std::string& name);

}  // namespace toricsim

#endif  // TORICSIM_SCENARIO_HPP
