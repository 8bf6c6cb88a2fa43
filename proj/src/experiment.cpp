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

#include "toricsim/experiment.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace toricsim {

namespace {

constexpr double kPi = std::numbers::pi;

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int outcome_parity(int index) {
  return (std::popcount(static_cast<unsigned>(index)) & 1) ? -1 : +1;
}

std::array<std::uint64_t, 16> sample_multinomial(
    const std::array<double, 16>& probs, std::uint64_t n_events,
    std::mt19937_64& rng) {
  std::array<double, 16> cdf{};
  double acc = 0.0;
  for (int k = 0; k < 16; ++k) {
    acc += std::max(probs[k], 0.0);
    cdf[k] = acc;
  }
  std::array<std::uint64_t, 16> counts{};
  for (std::uint64_t e = 0; e < n_events; ++e) {
    const double u = uniform01(rng) * acc;
    int k = 0;
    while (k < 15 && u >= cdf[k]) ++k;
    ++counts[k];
  }
  return counts;
}

CountRecord resample(const CountRecord& rec, std::mt19937_64& rng) {
  std::array<double, 16> probs{};
  for (int k = 0; k < 16; ++k) {
    probs[k] = static_cast<double>(rec.counts[k]) /
               static_cast<double>(rec.total);
  }
  CountRecord out;
  out.setting = rec.setting;
  out.counts = sample_multinomial(probs, rec.total, rng);
  out.total = rec.total;
  return out;
}

double stddev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

}  // namespace

void NoiseModel::validate() const {
  if (!(white_noise >= 0.0 && white_noise <= 1.0) ||
      !(dephasing >= 0.0 && dephasing <= 1.0) ||
      !(tilt >= -1.0 && tilt <= 1.0)) {
    throw std::invalid_argument("noise parameters out of range");
  }
}

DensityMatrix4 apply_noise(const DensityMatrix4& rho, const NoiseModel& nm) {
  nm.validate();
  constexpr int kDim = DensityMatrix4::kDim;
  DensityMatrix4 out = rho;

  // Tilt: amplitude damping between the two main populations.
  const double g = std::abs(nm.tilt);
  if (g > 0.0) {
    const int from = nm.tilt >= 0.0 ? 15 : 0;
    const int to = 15 - from;
    const double s = std::sqrt(1.0 - g);
    const c64 leaked = out.element(from, from);
    for (int k = 0; k < kDim; ++k) {
      out.set_element(from, k, out.element(from, k) * s);
      out.set_element(k, from, out.element(k, from) * s);
    }
    out.set_element(from, from, leaked * (1.0 - g));
    out.set_element(to, to, out.element(to, to) + g * leaked);
  }

  // Dephasing: logical phase flip with probability dephasing/2 shrinks
  // every coherence against |VVVV> by (1 - dephasing).
  if (nm.dephasing > 0.0) {
    const double shrink = 1.0 - nm.dephasing;
    for (int k = 0; k < kDim - 1; ++k) {
      out.set_element(k, 15, out.element(k, 15) * shrink);
      out.set_element(15, k, out.element(15, k) * shrink);
    }
  }

  // White noise.
  if (nm.white_noise > 0.0) {
    out *= (1.0 - nm.white_noise);
    DensityMatrix4 mix = DensityMatrix4::uniform_mixture();
    mix *= nm.white_noise;
    out += mix;
  }
  return out;
}

NoiseModel calibrate_noise(const CalibrationTargets& targets) {
  // Gauss-Newton on (V, P_HHHH, P_VVVV) computed through the channel.
  const DensityMatrix4 ideal = DensityMatrix4::from_pure(ghz_state(0.0));
  auto predict = [&](const NoiseModel& nm) {
    DensityMatrix4 rho = apply_noise(ideal, nm);
    auto pops = rho.z_populations();
    return std::array<double, 3>{2.0 * std::abs(rho.ghz_coherence()),
                                 pops[0], pops[15]};
  };
  std::array<double, 3> want{targets.visibility, targets.p_hhhh,
                             targets.p_vvvv};
  Eigen::Vector3d params(0.2, 0.1, 0.0);
  auto clamp_params = [](Eigen::Vector3d& p) {
    p[0] = std::clamp(p[0], 0.0, 1.0);
    p[1] = std::clamp(p[1], 0.0, 1.0);
    p[2] = std::clamp(p[2], -1.0, 1.0);
  };
  for (int iter = 0; iter < 100; ++iter) {
    NoiseModel nm{params[0], params[1], params[2]};
    auto pred = predict(nm);
    Eigen::Vector3d res(pred[0] - want[0], pred[1] - want[1],
                        pred[2] - want[2]);
    if (res.norm() < 1e-13) break;
    Eigen::Matrix3d jac;
    const double h = 1e-7;
    for (int p = 0; p < 3; ++p) {
      Eigen::Vector3d lo = params, hi = params;
      lo[p] -= h;
      hi[p] += h;
      clamp_params(lo);
      clamp_params(hi);
      auto f_lo = predict({lo[0], lo[1], lo[2]});
      auto f_hi = predict({hi[0], hi[1], hi[2]});
      for (int r = 0; r < 3; ++r) {
        jac(r, p) = (f_hi[r] - f_lo[r]) / (hi[p] - lo[p]);
      }
    }
    Eigen::Vector3d step = jac.fullPivLu().solve(res);
    params -= step;
    clamp_params(params);
  }
  NoiseModel nm{params[0], params[1], params[2]};
  auto pred = predict(nm);
  for (int r = 0; r < 3; ++r) {
    if (std::abs(pred[r] - want[r]) > 1e-9) {
      throw std::runtime_error("noise calibration did not converge");
    }
  }
  return nm;
}

NoiseModel load_noise_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open noise config: " + path);
  }
  nlohmann::json j = nlohmann::json::parse(in);
  NoiseModel nm{j.at("white_noise").get<double>(),
                j.at("dephasing").get<double>(),
                j.at("tilt").get<double>()};
  nm.validate();
  return nm;
}

void save_noise_config(const NoiseModel& nm, const CalibrationTargets& targets,
                       const std::string& path) {
  nlohmann::ordered_json j;
  j["white_noise"] = nm.white_noise;
  j["dephasing"] = nm.dephasing;
  j["tilt"] = nm.tilt;
  j["targets"] = {{"visibility", targets.visibility},
                  {"p_hhhh", targets.p_hhhh},
                  {"p_vvvv", targets.p_vvvv}};
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write noise config: " + path);
  }
  out << j.dump(2) << '\n';
}

std::array<double, 16> outcome_probabilities(const DensityMatrix4& rho,
                                             const Setting& setting) {
  return setting.basis == Setting::Basis::Z ? rho.z_populations()
                                            : rho.xy_populations(setting.gamma);
}

CountRecord sample_counts(const DensityMatrix4& rho, const Setting& setting,
                          std::uint64_t n_events, std::uint64_t seed) {
  if (n_events == 0) {
    throw std::invalid_argument("sample_counts needs n_events > 0");
  }
  std::mt19937_64 rng(seed);
  CountRecord rec;
  rec.setting = setting;
  rec.counts = sample_multinomial(outcome_probabilities(rho, setting),
                                  n_events, rng);
  rec.total = n_events;
  return rec;
}

void write_count_records_csv(std::ostream& out,
                             std::span<const CountRecord> records) {
  out << "gamma,outcome_index,count\n";
  for (const auto& rec : records) {
    for (int k = 0; k < 16; ++k) {
      if (rec.setting.basis == Setting::Basis::Z) {
        out << "z";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", rec.setting.gamma);
        out << buf;
      }
      out << ',' << k << ',' << rec.counts[k] << '\n';
    }
  }
}

std::vector<CountRecord> read_count_records_csv(std::istream& in) {
  std::vector<CountRecord> records;
  std::string line;
  if (!std::getline(in, line) || line != "gamma,outcome_index,count") {
    throw std::runtime_error("bad count record CSV header");
  }
  auto find_record = [&](const Setting& s) -> CountRecord& {
    for (auto& rec : records) {
      if (rec.setting.basis == s.basis &&
          (s.basis == Setting::Basis::Z || rec.setting.gamma == s.gamma)) {
        return rec;
      }
    }
    records.push_back(CountRecord{s, {}, 0});
    return records.back();
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string gamma_str, index_str, count_str;
    if (!std::getline(ls, gamma_str, ',') ||
        !std::getline(ls, index_str, ',') || !std::getline(ls, count_str)) {
      throw std::runtime_error("bad count record CSV row: " + line);
    }
    Setting s = gamma_str == "z" ? Setting::z()
                                 : Setting::xy(std::stod(gamma_str));
    CountRecord& rec = find_record(s);
    int k = std::stoi(index_str);
    std::uint64_t c = std::stoull(count_str);
    rec.counts.at(k) += c;
    rec.total += c;
  }
  return records;
}

std::pair<double, double> estimate_correlation(const CountRecord& rec) {
  if (rec.total == 0) {
    throw std::invalid_argument("empty count record");
  }
  double acc = 0.0;
  for (int k = 0; k < 16; ++k) {
    acc += outcome_parity(k) * static_cast<double>(rec.counts[k]);
  }
  const double n = static_cast<double>(rec.total);
  const double c = acc / n;
  const double var = std::max(1.0 - c * c, 0.0);
  return {c, std::sqrt(var / n)};
}

double wrap_phase(double phi) {
  while (phi > kPi) phi -= 2.0 * kPi;
  while (phi <= -kPi) phi += 2.0 * kPi;
  return phi;
}

FitResult fourier_fit(std::span<const CurvePoint> points) {
  std::vector<double> distinct;
  for (const auto& p : points) {
    if (p.sigma <= 0.0) {
      throw std::invalid_argument("fit point with non-positive sigma");
    }
    bool seen = false;
    for (double g : distinct) {
      if (std::abs(g - p.gamma) < 1e-12) seen = true;
    }
    if (!seen) distinct.push_back(p.gamma);
  }
  if (distinct.size() < 5) {
    throw std::invalid_argument(
        "fourier_fit needs at least 5 distinct settings");
  }
  auto [lo, hi] = std::minmax_element(distinct.begin(), distinct.end());
  if (*hi - *lo < kPi / 2.0 - 1e-9) {
    throw std::invalid_argument(
        "fourier_fit settings must span at least pi/2");
  }

  const int m = static_cast<int>(points.size());
  Eigen::MatrixXd x(m, 5);
  Eigen::VectorXd y(m), w(m);
  for (int i = 0; i < m; ++i) {
    const double g = points[i].gamma;
    x(i, 0) = 1.0;
    x(i, 1) = std::cos(2.0 * g);
    x(i, 2) = std::sin(2.0 * g);
    x(i, 3) = std::cos(4.0 * g);
    x(i, 4) = std::sin(4.0 * g);
    y(i) = points[i].value;
    w(i) = 1.0 / (points[i].sigma * points[i].sigma);
  }
  Eigen::MatrixXd a = x.transpose() * w.asDiagonal() * x;
  Eigen::VectorXd rhs = x.transpose() * w.asDiagonal() * y;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible()) {
    throw std::invalid_argument("rank-deficient fit design");
  }
  Eigen::VectorXd beta = lu.solve(rhs);
  Eigen::MatrixXd cov = lu.inverse();

  FitResult fit;
  fit.a0 = beta(0);
  fit.a1 = beta(1);
  fit.b1 = beta(2);
  fit.a2 = beta(3);
  fit.b2 = beta(4);
  for (int k = 0; k < 5; ++k) {
    fit.coeff_stderr[k] = std::sqrt(std::max(cov(k, k), 0.0));
  }
  fit.visibility = std::hypot(fit.a2, fit.b2);
  fit.phase = wrap_phase(std::atan2(-fit.b2, fit.a2));
  if (fit.visibility > 1e-12) {
    const double va = cov(3, 3), vb = cov(4, 4), vab = cov(3, 4);
    const double da = fit.a2 / fit.visibility;
    const double db = fit.b2 / fit.visibility;
    fit.visibility_stderr =
        std::sqrt(std::max(da * da * va + db * db * vb + 2 * da * db * vab,
                           0.0));
    const double v2 = fit.visibility * fit.visibility;
    const double pa = fit.b2 / v2, pb = -fit.a2 / v2;
    fit.phase_stderr = std::sqrt(
        std::max(pa * pa * va + pb * pb * vb + 2 * pa * pb * vab, 0.0));
  } else {
    fit.visibility_stderr = std::sqrt(std::max(cov(3, 3) + cov(4, 4), 0.0));
    fit.phase_stderr = std::numeric_limits<double>::infinity();
  }
  return fit;
}

std::pair<double, bool> fidelity_and_witness(double visibility,
                                             double p_hhhh, double p_vvvv) {
  for (double v : {visibility, p_hhhh, p_vvvv}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("fidelity inputs must be in [0, 1]");
    }
  }
  const double f = (visibility + p_hhhh + p_vvvv) / 2.0;
  return {f, f > 0.5};
}

std::vector<double> default_gamma_schedule() {
  std::vector<double> gammas(16);
  for (int k = 0; k < 16; ++k) gammas[k] = k * kPi / 16.0;
  return gammas;
}

std::vector<CurvePoint> curve_points_from_records(
    std::span<const CountRecord> xy_records) {
  std::vector<CurvePoint> points;
  for (const auto& rec : xy_records) {
    if (rec.setting.basis != Setting::Basis::XY) continue;
    auto [c, se] = estimate_correlation(rec);
    // Variance floor keeps saturated samples (|c| = 1) at finite weight.
    const double n = static_cast<double>(rec.total);
    const double floor = std::sqrt(1.0 / n) / n;
    points.push_back({rec.setting.gamma, c, std::max(se, floor)});
  }
  return points;
}

double bootstrap_correlation_error(const CountRecord& rec,
                                   const BootstrapConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<double> values;
  values.reserve(cfg.resamples);
  for (int r = 0; r < cfg.resamples; ++r) {
    values.push_back(estimate_correlation(resample(rec, rng)).first);
  }
  return stddev(values);
}

PipelineErrors bootstrap_pipeline_errors(const CountRecord& z_record,
                                         std::span<const CountRecord> xy_records,
                                         const BootstrapConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<double> czs, vs, phis, fs, phs, pvs;
  // Deviations of the phase are collected relative to the point estimate
  // so that samples straddling +/-pi do not inflate the spread.
  const double phase0 =
      fourier_fit(curve_points_from_records(xy_records)).phase;
  for (int r = 0; r < cfg.resamples; ++r) {
    CountRecord z = resample(z_record, rng);
    std::vector<CountRecord> xys;
    xys.reserve(xy_records.size());
    for (const auto& rec : xy_records) xys.push_back(resample(rec, rng));
    auto [cz, cz_se] = estimate_correlation(z);
    FitResult fit = fourier_fit(curve_points_from_records(xys));
    const double n = static_cast<double>(z.total);
    const double ph = static_cast<double>(z.counts[0]) / n;
    const double pv = static_cast<double>(z.counts[15]) / n;
    czs.push_back(cz);
    vs.push_back(fit.visibility);
    phis.push_back(wrap_phase(fit.phase - phase0));
    fs.push_back((std::min(fit.visibility, 1.0) + ph + pv) / 2.0);
    phs.push_back(ph);
    pvs.push_back(pv);
  }
  PipelineErrors err;
  err.c_z = stddev(czs);
  err.visibility = stddev(vs);
  err.phase = stddev(phis);
  err.fidelity = stddev(fs);
  err.p_hhhh = stddev(phs);
  err.p_vvvv = stddev(pvs);
  return err;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace toricsim
