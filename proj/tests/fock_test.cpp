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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <map>
#include <random>

#include "fock_oracle.hpp"
#include "toricsim/fock.hpp"

using namespace toricsim;

namespace {

FockState run_chain(SpdcWeighting w, const std::vector<Element>& chain) {
  FockState st = FockState::spdc_second_order(w);
  for (const Element& e : chain) st = st.applied(e);
  return st;
}

}  // namespace

TEST_CASE("the written source state has three equal branches of 4 photons") {
  auto st = FockState::spdc_second_order(SpdcWeighting::as_written);
  CHECK(st.branch_count() == 3);
  CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& [occ, amp] : st.branches()) {
    CHECK(total_photons(occ) == 4);
    CHECK(std::abs(amp - c64{1.0 / std::sqrt(3.0), 0}) < 1e-12);
  }
}

TEST_CASE("squaring the emission operator reproduces the written weights") {
  auto written = FockState::spdc_second_order(SpdcWeighting::as_written);
  auto bosonic = FockState::spdc_second_order(SpdcWeighting::bosonic);
  CHECK(bosonic.branch_count() == written.branch_count());
  for (const auto& [occ, amp] : written.branches()) {
    CHECK(std::abs(bosonic.amplitude(occ) - amp) < 1e-12);
  }
}

TEST_CASE("the HWP turns H into the diagonal superposition") {
  FockState st;
  OccVec occ{};
  occ[mode_index(Spatial::b, Pol::H)] = 1;
  st.add(occ, c64{1, 0});
  auto out = st.applied(Element::make_hwp(Spatial::b, 22.5));
  OccVec h{}, v{};
  h[mode_index(Spatial::b, Pol::H)] = 1;
  v[mode_index(Spatial::b, Pol::V)] = 1;
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(out.amplitude(h) - c64{s, 0}) < 1e-12);
  CHECK(std::abs(out.amplitude(v) - c64{s, 0}) < 1e-12);
  // And V into the anti-diagonal one.
  FockState stv;
  stv.add(v, c64{1, 0});
  auto outv = stv.applied(Element::make_hwp(Spatial::b, 22.5));
  CHECK(std::abs(outv.amplitude(h) - c64{s, 0}) < 1e-12);
  CHECK(std::abs(outv.amplitude(v) - c64{-s, 0}) < 1e-12);
  // The HWP is an involution.
  auto twice = out.applied(Element::make_hwp(Spatial::b, 22.5));
  CHECK(std::abs(twice.amplitude(h) - c64{1, 0}) < 1e-12);
}

TEST_CASE("the PBS merges H from one arm with V from the other") {
  FockState st;
  OccVec occ{};
  occ[mode_index(Spatial::a, Pol::H)] = 1;
  occ[mode_index(Spatial::b, Pol::V)] = 1;
  st.add(occ, c64{1, 0});
  auto out =
      st.applied(Element::make_pbs(Spatial::a, Spatial::b, Spatial::a,
                                   Spatial::b));
  // H in a transmits to a; V in b reflects into a: both photons in a.
  OccVec want{};
  want[mode_index(Spatial::a, Pol::H)] = 1;
  want[mode_index(Spatial::a, Pol::V)] = 1;
  CHECK(std::abs(std::abs(out.amplitude(want)) - 1.0) < 1e-12);
}

TEST_CASE("elements are norm- and photon-number-preserving") {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> gauss;
  const Element elements[] = {
      Element::make_hwp(Spatial::a, 22.5),
      Element::make_hwp(Spatial::b, 10.0),
      Element::make_pbs(Spatial::a, Spatial::b, Spatial::a, Spatial::b),
      Element::make_bs(Spatial::a, Spatial::b, Spatial::a, Spatial::b),
      Element::make_bs(Spatial::a, Spatial::m2, Spatial::m1, Spatial::m2),
  };
  for (int trial = 0; trial < 40; ++trial) {
    FockState st;
    for (int branch = 0; branch < 3; ++branch) {
      OccVec occ{};
      // Two photons spread over the a/b modes.
      occ[rng() % 4] += 1;
      occ[rng() % 4] += 1;
      st.add(occ, c64{gauss(rng), gauss(rng)});
    }
    if (st.norm() == 0.0) continue;
    st.normalize();
    const Element& e = elements[rng() % 5];
    auto out = st.applied(e);
    CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-10));
    for (const auto& [occ, amp] : out.branches()) {
      CHECK(total_photons(occ) == 2);
    }
  }
}

TEST_CASE("the full chain post-selects onto the GHZ state") {
  for (auto weighting :
       {SpdcWeighting::as_written, SpdcWeighting::bosonic}) {
    auto st = run_chain(weighting, ghz_source_chain());
    CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-10));
    auto ps = postselect_one_per_mode(st);
    REQUIRE(ps.state.has_value());
    // Fidelity 1 with GHZ^0 up to the global phase.
    const double fid = std::norm(ps.state->inner_product(ghz_state(0.0)));
    CHECK(fid == doctest::Approx(1.0).epsilon(1e-10));
    // Success probability frozen from the independent expansion: 1/24.
    CHECK(ps.success_probability ==
          doctest::Approx(1.0 / 24.0).epsilon(1e-10));
  }
}

TEST_CASE("success probability matches the brute-force expansion") {
  auto chain = ghz_source_chain();
  auto ps = postselect_one_per_mode(
      run_chain(SpdcWeighting::as_written, chain));
  fock_oracle::Poly brute = fock_oracle::chain_state(chain);
  const double p_brute = fock_oracle::success_probability(brute);
  CHECK(std::abs(ps.success_probability - p_brute) < 1e-10);
  // The brute-force state also agrees branch by branch.
  auto st = run_chain(SpdcWeighting::as_written, chain);
  for (const auto& [occ, amp] : st.branches()) {
    CHECK(std::abs(amp - brute[occ]) < 1e-10);
  }
}

TEST_CASE("swapping a BS output pair leaves the GHZ fidelity invariant") {
  std::vector<Element> swapped12 = {
      Element::make_hwp(Spatial::b, 22.5),
      Element::make_pbs(Spatial::a, Spatial::b, Spatial::a, Spatial::b),
      Element::make_bs(Spatial::a, Spatial::m2, Spatial::m2, Spatial::m1),
      Element::make_bs(Spatial::b, Spatial::m4, Spatial::m3, Spatial::m4),
  };
  std::vector<Element> swapped34 = {
      Element::make_hwp(Spatial::b, 22.5),
      Element::make_pbs(Spatial::a, Spatial::b, Spatial::a, Spatial::b),
      Element::make_bs(Spatial::a, Spatial::m2, Spatial::m1, Spatial::m2),
      Element::make_bs(Spatial::b, Spatial::m4, Spatial::m4, Spatial::m3),
  };
  for (const auto& chain : {swapped12, swapped34}) {
    auto ps = postselect_one_per_mode(
        run_chain(SpdcWeighting::as_written, chain));
    REQUIRE(ps.state.has_value());
    CHECK(std::norm(ps.state->inner_product(ghz_state(0.0))) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ps.success_probability ==
          doctest::Approx(1.0 / 24.0).epsilon(1e-10));
  }
}

TEST_CASE("post-selection with no overlap reports the empty result") {
  FockState st;
  OccVec occ{};
  occ[mode_index(Spatial::m1, Pol::H)] = 2;
  occ[mode_index(Spatial::m2, Pol::H)] = 1;
  occ[mode_index(Spatial::m3, Pol::H)] = 1;
  st.add(occ, c64{1, 0});
  auto ps = postselect_one_per_mode(st);
  CHECK(!ps.state.has_value());
  CHECK(ps.success_probability == 0.0);
}
