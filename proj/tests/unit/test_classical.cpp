#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "casimir/classical.hpp"
#include "casimir/error.hpp"
#include "test_oracles.hpp"

using namespace casimir;
using namespace casimir::testing;

TEST(NormalModeSolution, SymmetricAndAntisymmetricModes) {
  const Spectrum s = spectrum(validate(constant_params(0.5)), 0.0);
  for (double t : {0.0, 0.7, 3.1, 12.9}) {
    const OscillatorPair sym = normal_mode_solution(s, {0.4, 0.0, 0.3, 1.1}, t);
    EXPECT_DOUBLE_EQ(sym.x1, sym.x2);
    const OscillatorPair anti = normal_mode_solution(s, {0.0, 0.4, 0.3, 1.1}, t);
    EXPECT_DOUBLE_EQ(anti.x1, -anti.x2);
    const OscillatorPair rest = normal_mode_solution(s, {}, t);
    EXPECT_EQ(rest.x1, 0.0);
    EXPECT_EQ(rest.x2, 0.0);
  }
}

TEST(NormalModeSolution, SolvesFrozenEquationsOfMotion) {
  // x1'' + ω² x1 + ω_g² x2 = 0 checked by second differences.
  const Spectrum s = spectrum(validate(constant_params(0.5)), 0.0);
  const ModeAmplitudes a{0.3, -0.2, 0.4, 1.3};
  const double h = 1e-4;
  for (double t : {0.5, 2.0, 7.5}) {
    const auto x = [&](double at) { return normal_mode_solution(s, a, at); };
    const double acc1 = (x(t + h).x1 - 2.0 * x(t).x1 + x(t - h).x1) / (h * h);
    const double acc2 = (x(t + h).x2 - 2.0 * x(t).x2 + x(t - h).x2) / (h * h);
    const double w2 = s.omega * s.omega;
    const double g2 = s.omega_g * s.omega_g;
    EXPECT_NEAR(acc1 + w2 * x(t).x1 + g2 * x(t).x2, 0.0, 1e-6);
    EXPECT_NEAR(acc2 + w2 * x(t).x2 + g2 * x(t).x1, 0.0, 1e-6);
  }
}

TEST(ClassicalForce, Examples) {
  const ValidatedModel model = validate(reference_params());
  EXPECT_EQ(classical_force(model, {.x1 = 0.0, .x2 = 0.8, .y = 0.0}), 0.0);
  EXPECT_EQ(classical_force(model, {.x1 = 0.8, .x2 = 0.0, .y = 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(classical_force(model, {.x1 = 1.0, .x2 = 1.0, .y = 0.0}), 0.5);
  const PhaseState s{.x1 = 0.3, .x2 = 0.7, .y = 1.2};
  PhaseState flipped = s;
  flipped.x2 = -s.x2;
  EXPECT_DOUBLE_EQ(classical_force(model, flipped), -classical_force(model, s));
  EXPECT_THROW(classical_force(model, {.y = -1.0}), Error);
}

TEST(ClassicalForce, NormalCoordinateFormMatches) {
  ModelSampler sampler(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 300; ++i) {
    const RandomCase c = sampler.next();
    const ValidatedModel model = validate(c.params);
    const PhaseState s{.x1 = u(sampler.engine()), .x2 = u(sampler.engine()), .y = c.y};
    const NormalPair n = to_normal({s.x1, s.x2});
    const double via_modes = -coupling_derivative(model.coupling(), c.y) * (n.plus * n.plus - n.minus * n.minus) / 2.0;
    const double direct = classical_force(model, s);
    EXPECT_NEAR(via_modes, direct, 1e-12 * std::max(std::abs(direct), 1e-300) + 1e-300);
  }
}

TEST(ClassicalForce, VanishesInClassicalGroundState) {
  const ValidatedModel model = validate(reference_params());
  for (double y : {0.0, 0.5, 3.0, 9.0}) {
    const OscillatorPair ground = from_normal({0.0, 0.0});
    EXPECT_EQ(classical_force(model, {.x1 = ground.x1, .x2 = ground.x2, .y = y}), 0.0);
  }
}

TEST(EvolveClassical, DecoupledCaseIsExact) {
  ModelParams p = constant_params(0.0);
  p.coupling.domain = {0.0, 100.0};
  const ValidatedModel model = validate(p);
  const PhaseState start{.x1 = 0.4, .x2 = -0.2, .y = 5.0, .p1 = 0.1, .p2 = 0.3, .p_y = 2.0};
  const auto run = evolve_classical(model, start, 0.01, 20.0, {IntegratorOrder::Sixth, 100});
  ASSERT_FALSE(run.exited_domain);
  for (const PhaseState& s : run.states) {
    // x(t) = x0 cos t + p0 sin t for ω = m = 1
    EXPECT_NEAR(s.x1, 0.4 * std::cos(s.t) + 0.1 * std::sin(s.t), 1e-9);
    EXPECT_NEAR(s.x2, -0.2 * std::cos(s.t) + 0.3 * std::sin(s.t), 1e-9);
    EXPECT_NEAR(s.y, 5.0 + 2.0 / 1000.0 * s.t, 1e-12);
    EXPECT_EQ(s.p_y, 2.0);
  }
}

TEST(EvolveClassical, EnergyDriftBelowMicroOverHundredThousandSteps) {
  const ValidatedModel model = validate(reference_params());
  const PhaseState start{.x1 = 0.3, .x2 = -0.1, .y = 5.0, .p1 = 0.0, .p2 = 0.2, .p_y = 0.0};
  const double period = 2.0 * std::numbers::pi / spectrum(model, 0.0).omega_plus;  // shortest period
  const auto run = evolve_classical(model, start, 0.01 * period, 1e5 * 0.01 * period, {IntegratorOrder::Fourth, 10});
  ASSERT_FALSE(run.exited_domain);
  EXPECT_EQ(run.states.size(), 10001u);
  double drift = 0.0;
  for (double e : run.energies) drift = std::max(drift, std::abs(e - run.energies.front()) / run.energies.front());
  EXPECT_LT(drift, 1e-6);
}

TEST(EvolveClassical, PlainLeapfrogConservesLessWell) {
  const ValidatedModel model = validate(reference_params());
  const PhaseState start{.x1 = 0.3, .x2 = -0.1, .y = 3.0, .p2 = 0.2};
  const double dt = 0.01 * 2.0 * std::numbers::pi / spectrum(model, 0.0).omega_plus;
  const auto drift = [&](IntegratorOrder order) {
    const auto run = evolve_classical(model, start, dt, 2000 * dt, {order, 1});
    double d = 0.0;
    for (double e : run.energies) d = std::max(d, std::abs(e - run.energies.front()));
    return d;
  };
  const double second = drift(IntegratorOrder::Second);
  const double fourth = drift(IntegratorOrder::Fourth);
  const double sixth = drift(IntegratorOrder::Sixth);
  EXPECT_GT(second, 100.0 * fourth);
  EXPECT_GT(fourth, sixth);
}

TEST(EvolveClassical, FastModesFollowInstantaneousSpectrum) {
  // Heavy slow coordinate: windowed frequencies of x± track Ω±(y(t)).
  ModelParams p = reference_params();
  p.M = 1e4;
  const ValidatedModel model = validate(p);
  const PhaseState start{.x1 = 0.5, .x2 = 0.1, .y = 0.5, .p1 = 0.0, .p2 = 0.0, .p_y = 1e4 * 2e-3};
  const double dt = 0.01;
  const auto run = evolve_classical(model, start, dt, 3000.0, {IntegratorOrder::Fourth, 1});
  ASSERT_FALSE(run.exited_domain);

  const std::size_t window = 6000;  // 60 time units, ~10 oscillations
  int windows = 0;
  for (std::size_t begin = 0; begin + window < run.states.size(); begin += 5 * window) {
    std::vector<double> t, plus, minus;
    for (std::size_t i = begin; i < begin + window; ++i) {
      const PhaseState& s = run.states[i];
      const NormalPair n = to_normal({s.x1, s.x2});
      t.push_back(s.t);
      plus.push_back(n.plus);
      minus.push_back(n.minus);
    }
    const double y_mid = run.states[begin + window / 2].y;
    const Spectrum expected = spectrum(model, y_mid);
    EXPECT_NEAR(zero_crossing_frequency(t, plus), expected.omega_plus, 0.01 * expected.omega_plus) << "y " << y_mid;
    EXPECT_NEAR(zero_crossing_frequency(t, minus), expected.omega_minus, 0.01 * expected.omega_minus)
        << "y " << y_mid;
    ++windows;
  }
  EXPECT_GE(windows, 4);
  // y actually moved across the run
  EXPECT_GT(run.states.back().y - start.y, 4.0);
}

TEST(EvolveClassical, FlagsDomainExit) {
  const ValidatedModel model = validate(reference_params());
  const PhaseState start{.y = 0.05, .p_y = -1000.0 * 0.1};
  const auto run = evolve_classical(model, start, 0.01, 10.0);
  EXPECT_TRUE(run.exited_domain);
  EXPECT_GE(run.states.back().y, 0.0);
  EXPECT_LT(run.states.back().t, 1.0);
}

TEST(EvolveClassical, RejectsBadArguments) {
  const ValidatedModel model = validate(reference_params());
  EXPECT_THROW(evolve_classical(model, {.y = 1.0}, 0.0, 1.0), Error);
  EXPECT_THROW(evolve_classical(model, {.y = -1.0}, 0.1, 1.0), Error);
  EXPECT_THROW(integrator_order_from_int(3), Error);
}
