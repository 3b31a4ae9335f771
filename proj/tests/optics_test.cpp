// Copyright 2026 The photonlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photonlogic/optics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"

namespace photonlogic {
namespace {

using testing::kPi;
using testing::random_vector;
constexpr auto H = Polarization::H;
constexpr auto V = Polarization::V;

HybridState single(Polarization p, PathId path = 0) {
  HybridState s(1);
  s.register_path(0, 1);
  s.add_term(1.0, {{p, path}});
  return s;
}

HybridState random_two_photon(std::mt19937_64& rng) {
  return testing::erased(random_vector(rng, 4));
}

double overlap_fidelity(const HybridState& a, const HybridState& b) {
  return std::norm(inner_product(a, b));
}

TEST(SingleQubitUnitary, RejectsNonUnitary) {
  EXPECT_THROW(SingleQubitUnitary({1.0, 1.0, 0.0, 1.0}), StateError);
  EXPECT_NO_THROW(SingleQubitUnitary::hadamard());
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    EXPECT_LE(SingleQubitUnitary::unitarity_defect(
                  testing::random_unitary(rng).matrix()),
              1e-12);
  }
  EXPECT_NEAR(std::arg(SingleQubitUnitary::rotation(2)(1, 1)), kPi / 2.0, 1e-15);
}

TEST(BeamSplitter, SplitsAndRecombines) {
  const HybridState in = single(H, 0);
  const HybridState split = beam_splitter(in, 0, 0, 1);
  ASSERT_EQ(split.terms().size(), 2u);
  for (const StateTerm& t : split.terms()) {
    EXPECT_NEAR(std::abs(t.coeff), 1.0 / std::sqrt(2.0), 1e-15);
  }
  const HybridState back = beam_splitter(split, 0, 0, 1);
  EXPECT_NEAR(fidelity(back, in), 1.0, 1e-15);
}

TEST(BeamSplitter, DifferenceModeExitsSecondPath) {
  HybridState s(1);
  s.register_path(0, 1);
  s.add_term(1.0 / std::sqrt(2.0), {{V, 0}});
  s.add_term(-1.0 / std::sqrt(2.0), {{V, 1}});
  const HybridState out = beam_splitter(s, 0, 0, 1);
  ASSERT_EQ(out.terms().size(), 1u);
  EXPECT_EQ(out.terms()[0].photons[0].path, 1);
}

TEST(BeamSplitter, IsAnInvolutionAndUnitary) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const HybridState s = random_two_photon(rng);
    const HybridState once = beam_splitter(s, 1, 0, 1);
    EXPECT_NEAR(norm(once), 1.0, 1e-13);
    EXPECT_NEAR(overlap_fidelity(beam_splitter(once, 1, 0, 1), s), 1.0, 1e-13);
  }
  EXPECT_THROW(beam_splitter(single(H), 0, 0, 0), StateError);
  EXPECT_THROW(beam_splitter(single(H), 0, 0, 5), StateError);
}

TEST(BeamSplitter, SignFlipChangesTheOutput) {
  const HybridState in = single(H, 0);
  const HybridState plus = beam_splitter(in, 0, 0, 1, +1);
  const HybridState minus = beam_splitter(in, 0, 0, 1, -1);
  EXPECT_NEAR(overlap_fidelity(plus, minus), 0.0, 1e-15);
}

TEST(CoherentBeamSplitter, EqualBeamsLeaveVacuumInTheDifferencePort) {
  const double alpha = 2000.0;
  HybridState s = single(H);
  const RegisterId a = s.add_register(alpha);
  const RegisterId b = s.add_register(alpha);
  s = coherent_beam_splitter(s, a, b);
  EXPECT_NEAR(std::abs(testing::register_value(s, a)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(testing::register_value(s, b) - std::sqrt(2.0) * alpha),
              0.0, 1e-9);
}

TEST(CoherentBeamSplitter, OppositePhases) {
  const double alpha = 2000.0;
  const double theta = 0.003;
  HybridState s = single(H);
  const RegisterId a = s.add_register(alpha * std::polar(1.0, -theta));
  const RegisterId b = s.add_register(alpha * std::polar(1.0, theta));
  s = coherent_beam_splitter(s, a, b);
  const Amplitude diff = testing::register_value(s, a);
  const Amplitude sum = testing::register_value(s, b);
  EXPECT_NEAR(std::abs(diff - Amplitude(0.0, -std::sqrt(2.0) * alpha * std::sin(theta))),
              0.0, 1e-10);
  EXPECT_NEAR(std::abs(sum - std::sqrt(2.0) * alpha * std::cos(theta)), 0.0, 1e-9);
  EXPECT_NEAR(std::norm(diff) + std::norm(sum), 2.0 * alpha * alpha, 1e-6);
  EXPECT_THROW(coherent_beam_splitter(s, a, a), StateError);
}

TEST(CrossPhase, OnlySelectedModesPickUpThePhase) {
  HybridState s(1);
  s.add_term(1.0 / std::sqrt(2.0), {{H, 0}});
  s.add_term(1.0 / std::sqrt(2.0), {{V, 0}});
  const RegisterId r = s.add_register(10.0);
  const double theta = 0.25;
  const HybridState out = cross_phase(s, {r, {0, V, std::nullopt}, theta});
  for (const StateTerm& t : out.terms()) {
    const Amplitude expected =
        t.photons[0].pol == V ? 10.0 * std::polar(1.0, theta) : Amplitude(10.0);
    EXPECT_NEAR(std::abs(t.registers[0] - expected), 0.0, 1e-13);
  }
  const HybridState undone = cross_phase(out, {r, {0, V, std::nullopt}, -theta});
  EXPECT_NEAR(overlap_fidelity(undone, s), 1.0, 1e-13);
}

TEST(CrossPhase, CommutesWithOperationsOnOtherPhotons) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) {
    HybridState s = random_two_photon(rng);
    const RegisterId r = s.add_register(5.0);
    const SingleQubitUnitary u = testing::random_unitary(rng);
    const XpmCoupling c{r, {0, V, 0}, 0.4};
    const HybridState ab = apply_single_qubit(cross_phase(s, c), 1, u);
    const HybridState ba = cross_phase(apply_single_qubit(s, 1, u), c);
    EXPECT_NEAR(overlap_fidelity(ab, ba), 1.0, 1e-12);
  }
}

TEST(PhaseShift, RotatesEveryTerm) {
  HybridState s = single(H);
  const RegisterId r = s.add_register(3.0);
  s = phase_shift(s, r, kPi / 2.0);
  EXPECT_NEAR(std::abs(testing::register_value(s, r) - Amplitude(0.0, 3.0)), 0.0,
              1e-14);
}

TEST(ApplySingleQubit, Examples) {
  const HybridState h = single(H);
  EXPECT_NEAR(fidelity(apply_single_qubit(h, 0, SingleQubitUnitary::identity()), h),
              1.0, 1e-15);
  EXPECT_NEAR(fidelity(apply_single_qubit(h, 0, SingleQubitUnitary::pauli_x()),
                       single(V)),
              1.0, 1e-15);
  // Filtered to a path the photon is not on: no effect.
  EXPECT_NEAR(fidelity(apply_single_qubit(h, 0, SingleQubitUnitary::pauli_x(), 1), h),
              1.0, 1e-15);
  const HybridState z = apply_single_qubit(single(V), 0, SingleQubitUnitary::pauli_z());
  EXPECT_NEAR(std::abs(z.terms()[0].coeff + 1.0), 0.0, 1e-15);
}

TEST(PathSwitch, SwapsAndIsAnInvolution) {
  const HybridState out = path_switch(single(H, 0), 0, 0, 1);
  EXPECT_EQ(out.terms()[0].photons[0].path, 1);
  std::mt19937_64 rng(13);
  const HybridState s = random_two_photon(rng);
  EXPECT_NEAR(overlap_fidelity(path_switch(path_switch(s, 1, 0, 1), 1, 0, 1), s),
              1.0, 1e-14);
}

TEST(ConditionalPhase, PiFlipsSignTwiceIsIdentity) {
  const HybridState s = single(H, 1);
  const HybridState once = conditional_phase(s, 0, 1, kPi);
  EXPECT_NEAR(std::abs(once.terms()[0].coeff + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(conditional_phase(once, 0, 1, kPi).terms()[0].coeff - 1.0),
              0.0, 1e-15);
  EXPECT_NEAR(std::abs(conditional_phase(s, 0, 0, kPi).terms()[0].coeff - 1.0),
              0.0, 1e-15);
}

TEST(ModePhase, OnlyTheNamedMode) {
  HybridState s(1);
  s.add_term(1.0 / std::sqrt(2.0), {{H, 0}});
  s.add_term(1.0 / std::sqrt(2.0), {{V, 0}});
  const HybridState out = mode_phase(s, 0, {V, 0}, kPi);
  for (const StateTerm& t : out.terms()) {
    EXPECT_NEAR(t.coeff.real(), t.photons[0].pol == V ? -1.0 / std::sqrt(2.0)
                                                      : 1.0 / std::sqrt(2.0),
                1e-15);
  }
}

}  // namespace
}  // namespace photonlogic
