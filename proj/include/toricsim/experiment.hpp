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

#ifndef TORICSIM_EXPERIMENT_HPP
#define TORICSIM_EXPERIMENT_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "toricsim/statevector.hpp"

namespace toricsim {

/// Parameterizes the population and coherence loss of the photonic
/// states. Applied as three channels in a fixed order:
///   1. tilt: amplitude damping between |VVVV> and |HHHH> with rate
///      |tilt| (positive tilts toward HHHH),
///   2. dephasing: logical phase flip with probability dephasing/2, which
///      shrinks the GHZ coherence by exactly (1 - dephasing),
///   3. white noise: mix with the uniform state at weight white_noise.
/// Every step is completely positive and trace preserving, so any
/// parameter draw maps physical states to physical states.
struct NoiseModel {
  double white_noise = 0.0;  // in [0, 1]
  double dephasing = 0.0;    // in [0, 1]
  double tilt = 0.0;         // in [-1, 1]

  void validate() const;
};

DensityMatrix4 apply_noise(const DensityMatrix4& rho, const NoiseModel& nm);

/// Fits (white_noise, dephasing, tilt) so that the noisy GHZ^0 state
/// reproduces the target visibility and main populations.
struct CalibrationTargets {
  double visibility = 0.683;
  double p_hhhh = 0.412;
  double p_vvvv = 0.396;
};
NoiseModel calibrate_noise(const CalibrationTargets& targets);

NoiseModel load_noise_config(const std::string& path);
void save_noise_config(const NoiseModel& nm, const CalibrationTargets& targets,
                       const std::string& path);

/// A measurement setting: the Z basis or the xy-plane product basis at
/// angle gamma.
struct Setting {
  enum class Basis { Z, XY };
  Basis basis = Basis::Z;
  double gamma = 0.0;

  static Setting z() { return {Basis::Z, 0.0}; }
  static Setting xy(double gamma) { return {Basis::XY, gamma}; }
};

std::array<double, 16> outcome_probabilities(const DensityMatrix4& rho,
                                             const Setting& setting);

/// Counted outcomes of one setting. Outcome index bits are little-endian
/// per qubit, 0 = H (eigenvalue +1), 1 = V (eigenvalue -1).
struct CountRecord {
  Setting setting;
  std::array<std::uint64_t, 16> counts{};
  std::uint64_t total = 0;
};

/// Multinomial draw over the 16 outcomes; deterministic given the seed.
CountRecord sample_counts(const DensityMatrix4& rho, const Setting& setting,
                          std::uint64_t n_events, std::uint64_t seed);

/// CSV round-trip for count records, columns gamma,outcome_index,count.
/// The Z-basis setting writes "z" in the gamma column.
void write_count_records_csv(std::ostream& out,
                             std::span<const CountRecord> records);
std::vector<CountRecord> read_count_records_csv(std::istream& in);

/// Parity estimator: mean of the product of the four +/-1 outcomes, with
/// the binomial standard error sqrt((1-c^2)/N). Throws on empty records.
std::pair<double, double> estimate_correlation(const CountRecord& rec);

struct CurvePoint {
  double gamma;
  double value;
  double sigma;  // weight 1/sigma^2; must be > 0
};

/// Result of the weighted fit to
///   a0 + a1 cos(2g) + b1 sin(2g) + a2 cos(4g) + b2 sin(4g),
/// with visibility V = sqrt(a2^2 + b2^2) and phase from a2 = V cos(phi),
/// b2 = -V sin(phi), so the k=2 harmonic reads V cos(4g + phi).
struct FitResult {
  double a0 = 0, a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  double visibility = 0;
  double phase = 0;  // wrapped to (-pi, pi]
  std::array<double, 5> coeff_stderr{};  // order a0,a1,b1,a2,b2
  double visibility_stderr = 0;
  double phase_stderr = 0;
};

/// Weighted least squares through the normal equations. Requires at
/// least 5 distinct gammas spanning >= pi/2; throws on rank-deficient
/// designs.
FitResult fourier_fit(std::span<const CurvePoint> points);

double wrap_phase(double phi);

/// F = (V + P_HHHH + P_VVVV)/2 and the witness verdict F > 1/2.
std::pair<double, bool> fidelity_and_witness(double visibility,
                                             double p_hhhh, double p_vvvv);

/// 16 equidistant gammas over [0, pi): two periods of the 4-gamma
/// harmonic.
std::vector<double> default_gamma_schedule();

struct BootstrapConfig {
  int resamples = 1000;
  std::uint64_t seed = 0;
};

/// Bootstrap standard error of the parity estimate of one record.
double bootstrap_correlation_error(const CountRecord& rec,
                                   const BootstrapConfig& cfg);

struct PipelineErrors {
  double c_z = 0;
  double visibility = 0;
  double phase = 0;
  double fidelity = 0;
  double p_hhhh = 0;
  double p_vvvv = 0;
};

/// Bootstrap over all records at once: resamples counts, reruns the fit
/// and the fidelity formula, and reports standard deviations.
PipelineErrors bootstrap_pipeline_errors(const CountRecord& z_record,
                                         std::span<const CountRecord> xy_records,
                                         const BootstrapConfig& cfg);

/// Curve points from sampled records, with a variance floor so that
/// saturated parities (|c| = 1 in a finite sample) keep a finite weight.
std::vector<CurvePoint> curve_points_from_records(
    std::span<const CountRecord> xy_records);

/// splitmix64; used to derive independent per-setting streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace toricsim

#endif  // TORICSIM_EXPERIMENT_HPP
