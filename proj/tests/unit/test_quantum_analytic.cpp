#include <gtest/gtest.h>

#include <cmath>

#include "casimir/error.hpp"
#include "casimir/quantum_analytic.hpp"
#include "test_oracles.hpp"

using namespace casimir;
using namespace casimir::testing;

namespace {

const ValidatedModel& reference_model() {
  static const ValidatedModel model = validate(reference_params());
  return model;
}

}  // namespace

TEST(VacuumEnergy, Examples) {
  EXPECT_DOUBLE_EQ(vacuum_energy(validate(constant_params(0.0)), 2.0), 1.0);
  EXPECT_NEAR(vacuum_energy(reference_model(), 0.0), reference::kVacuumEnergy, 1e-15);
  ModelSampler sampler(23);
  for (int i = 0; i < 100; ++i) {
    RandomCase c = sampler.next();
    const ValidatedModel model = validate(c.params);
    if (coupling_value(model.coupling(), c.y) == 0.0) continue;
    const double free = model.hbar() * std::sqrt(model.k() / model.m());
    EXPECT_LT(vacuum_energy(model, c.y), free);
  }
}

TEST(VacuumEnergy, ShiftMatchesDirectDifference) {
  ModelSampler sampler(29);
  for (int i = 0; i < 100; ++i) {
    const RandomCase c = sampler.next();
    const ValidatedModel model = validate(c.params);
    const double free = model.hbar() * std::sqrt(model.k() / model.m());
    EXPECT_NEAR(vacuum_energy_shift(model, c.y), vacuum_energy(model, c.y) - free, 1e-14 * free);
  }
}

TEST(CasimirForce, Examples) {
  EXPECT_EQ(casimir_force(validate(constant_params(0.7)), 3.0), 0.0);
  EXPECT_NEAR(casimir_force(reference_model(), 0.0), reference::kForce, 1e-15);
  for (double y : {0.0, 0.5, 2.0, 8.0}) EXPECT_LT(casimir_force(reference_model(), y), 0.0);
}

TEST(CasimirForce, IsMinusGradientOfVacuumEnergy) {
  const ValidatedModel& model = reference_model();
  const double h = 1e-4;
  for (double y : {0.1, 0.5, 1.0, 2.5, 4.0, 5.0}) {
    const double fd = -central_difference([&](double at) { return vacuum_energy_shift(model, at); }, y, h);
    const double f = casimir_force(model, y);
    EXPECT_NEAR(fd, f, 1e-6 * std::abs(f)) << "y = " << y;
  }
}

TEST(VacuumFluctuations, Examples) {
  const Fluctuations free = vacuum_fluctuations(validate(constant_params(0.0)), 1.0);
  EXPECT_DOUBLE_EQ(free.x_plus_sq, 0.5);
  EXPECT_DOUBLE_EQ(free.x_minus_sq, 0.5);
  EXPECT_EQ(free.x1x2, 0.0);

  const Fluctuations f = vacuum_fluctuations(reference_model(), 0.0);
  EXPECT_NEAR(f.x_plus_sq, reference::kXPlusSq, 1e-15);
  EXPECT_NEAR(f.x_minus_sq, reference::kXMinusSq, 1e-15);
  EXPECT_NEAR(f.x1x2, reference::kX1X2, 1e-15);

  for (double y : {0.0, 1.0, 9.0}) EXPECT_LT(vacuum_fluctuations(reference_model(), y).x1x2, 0.0);
}

TEST(LifshitzForce, Examples) {
  EXPECT_EQ(lifshitz_force(validate(constant_params(0.0)), 1.0), 0.0);
  EXPECT_NEAR(lifshitz_force(reference_model(), 0.0), reference::kForce, 1e-15);
  // -g'(0) <x1 x2> with g'(0) = -0.5
  EXPECT_NEAR(lifshitz_force(reference_model(), 0.0), 0.5 * reference::kX1X2, 1e-16);
}

TEST(LifshitzForce, CoincidesWithCasimirRoute) {
  ModelSampler sampler(31);
  for (int i = 0; i < 1000; ++i) {
    const RandomCase c = sampler.next();
    const ValidatedModel model = validate(c.params);
    const double a = casimir_force(model, c.y);
    const double b = lifshitz_force(model, c.y);
    EXPECT_LT(std::abs(a - b) / std::max(std::abs(a), 1e-30), 1e-12);
  }
}

TEST(Bogoliubov, FreeLimitIsTrivial) {
  const BogoliubovCoeffs c = bogoliubov_coefficients(validate(constant_params(0.0)), 0.0);
  EXPECT_EQ(c.beta_1p, 0.0);
  EXPECT_EQ(c.beta_1m, 0.0);
  EXPECT_EQ(c.beta_2p, 0.0);
  EXPECT_EQ(c.beta_2m, 0.0);
  EXPECT_DOUBLE_EQ(c.alpha_1p, 1.0 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(c.alpha_1m, 1.0 / std::sqrt(2.0));
  const FreeQuanta n = mean_free_quanta(c);
  EXPECT_EQ(n.n1, 0.0);
  EXPECT_EQ(n.n2, 0.0);
}

TEST(Bogoliubov, ReferenceValuesAndSigns) {
  const BogoliubovCoeffs c = bogoliubov_coefficients(reference_model(), 0.0);
  EXPECT_NEAR(c.alpha_1p, reference::kAlpha1p, 1e-15);
  EXPECT_NEAR(c.beta_1p, reference::kBeta1p, 1e-15);
  EXPECT_NEAR(c.beta_1m, reference::kBeta1m, 1e-15);
  EXPECT_LT(c.beta_1m, 0.0);
  EXPECT_EQ(c.alpha_2p, c.alpha_1p);
  EXPECT_EQ(c.beta_2p, c.beta_1p);
  EXPECT_EQ(c.alpha_2m, -c.alpha_1m);
  EXPECT_EQ(c.beta_2m, -c.beta_1m);
}

TEST(Bogoliubov, NormalizationOnRandomModels) {
  ModelSampler sampler(37);
  for (int i = 0; i < 500; ++i) {
    const RandomCase c = sampler.next();
    const BogoliubovCoeffs b = bogoliubov_coefficients(validate(c.params), c.y);
    EXPECT_NEAR(b.plus_normalization(), 1.0, 1e-12);
    EXPECT_NEAR(b.minus_normalization(), 1.0, 1e-12);
  }
}

TEST(MeanFreeQuanta, ReferenceAndSymmetry) {
  const FreeQuanta n = mean_free_quanta(bogoliubov_coefficients(reference_model(), 0.0));
  EXPECT_NEAR(n.n1, reference::kMeanQuanta, 1e-15);
  EXPECT_NEAR(n.n1, 0.02032, 5e-6);
  EXPECT_EQ(n.n1, n.n2);
  for (double y : {0.0, 3.0, 9.5}) EXPECT_GT(mean_free_quanta(bogoliubov_coefficients(reference_model(), y)).n1, 0.0);
}

TEST(SqueezedExpansion, FreeVacuumIsGroundProductState) {
  const VacuumExpansion e =
      squeezed_vacuum_expansion(bogoliubov_coefficients(validate(constant_params(0.0)), 0.0), Branch::Plus, 6);
  EXPECT_EQ(e.c0, 1.0);
  EXPECT_EQ(e.coefficients.front(), 1.0);
  for (std::size_t n = 1; n < e.coefficients.size(); ++n) EXPECT_EQ(e.coefficients[n], 0.0);
  EXPECT_EQ(e.tail, 0.0);
}

TEST(SqueezedExpansion, ReferenceCoefficients) {
  const BogoliubovCoeffs b = bogoliubov_coefficients(reference_model(), 0.0);
  const VacuumExpansion e = squeezed_vacuum_expansion(b, Branch::Plus, 30);
  EXPECT_NEAR(e.ratio, reference::kPlusRatio, 1e-15);
  EXPECT_NEAR(e.c0, reference::kC0, 1e-15);
  EXPECT_NEAR(e.coefficients[1], reference::kC1, 1e-15);
  for (std::size_t n = 0; n + 1 < e.coefficients.size(); ++n) {
    EXPECT_LT(e.coefficients[n] * e.coefficients[n + 1], 0.0) << n;
    EXPECT_NEAR(e.coefficients[n + 1], -e.ratio * e.coefficients[n], 1e-16);
  }
}

TEST(SqueezedExpansion, NormPlusTailIsOne) {
  ModelSampler sampler(41);
  for (int i = 0; i < 200; ++i) {
    const RandomCase c = sampler.next();
    const BogoliubovCoeffs b = bogoliubov_coefficients(validate(c.params), c.y);
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
      for (int n_max : {0, 1, 5, 20}) {
        const VacuumExpansion e = squeezed_vacuum_expansion(b, branch, n_max);
        EXPECT_NEAR(e.truncated_norm_sq() + e.tail, 1.0, 1e-12);
        EXPECT_LT(std::abs(e.ratio), 1.0);
      }
    }
  }
}

TEST(SqueezedExpansion, GuardsRatio) {
  BogoliubovCoeffs b;
  b.alpha_1p = 0.5;
  b.beta_1p = 0.5;
  try {
    squeezed_vacuum_expansion(b, Branch::Plus, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidRatio);
  }
  EXPECT_THROW(squeezed_vacuum_expansion(bogoliubov_coefficients(reference_model(), 0.0), Branch::Plus, -1), Error);
}

TEST(ZeroCouplingLimit, QuantitiesApproachFreeValuesContinuously) {
  double previous_n = 1.0;
  double previous_gap = 1.0;
  for (double g0 : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6}) {
    ModelParams p = reference_params();
    p.coupling.g0 = g0;
    const ValidatedModel model = validate(p);
    const VacuumObservables o = analytic_observables(model, 0.0);
    EXPECT_LT(o.n1, previous_n);
    EXPECT_LT(1.0 - o.energy, previous_gap);
    EXPECT_NEAR(o.x1x2, 0.0, g0);
    EXPECT_NEAR(casimir_force(model, 0.0), 0.0, g0 * g0);
    previous_n = o.n1;
    previous_gap = 1.0 - o.energy;
  }
  EXPECT_LT(previous_n, 1e-12);
}
