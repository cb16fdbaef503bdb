// Copyright 2026 The icmac Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "icmac/epi.h"
#include "icmac/random_scenario.h"

namespace icmac {
namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

DiscreteDensity1D Normalized(std::vector<double> values, double step) {
  double sum = 0.0;
  for (double v : values) sum += v;
  for (double& v : values) v /= sum * step;
  return {step, std::move(values)};
}

DiscreteDensity1D Uniform(int cells, double width) {
  return {width / cells, std::vector<double>(static_cast<std::size_t>(cells), 1.0 / width)};
}

TEST(GaussianEntropy, Examples) {
  EXPECT_NEAR(gaussian_entropy(1.0 / kTwoPiE), 0.0, 1e-15);
  EXPECT_NEAR(gaussian_entropy(1.0), 1.4189385332046727, 1e-12);
  EXPECT_NEAR(gaussian_entropy(4.0) - gaussian_entropy(1.0), std::log(2.0), 1e-15);
  EXPECT_THROW(gaussian_entropy(0.0), std::invalid_argument);
}

TEST(EntropyPower, Examples) {
  EXPECT_NEAR(entropy_power(0.0), 0.058549831524319168, 1e-15);
  EXPECT_NEAR(entropy_power(gaussian_entropy(2.5)), 2.5, 1e-14);
  // n-dimensional isotropic Gaussian: h = n/2 ln(2 pi e s).
  EXPECT_NEAR(entropy_power(1.5 * std::log(kTwoPiE * 0.7), 3), 0.7, 1e-14);
  EXPECT_THROW(entropy_power(0.0, 0), std::invalid_argument);
}

TEST(EntropyPower, GaussianRoundTripOverLogSweep) {
  for (int e = -60; e <= 60; ++e) {
    const double v = std::pow(10.0, e / 10.0);
    EXPECT_NEAR(entropy_power(gaussian_entropy(v)) / v, 1.0, 1e-12);
  }
}

TEST(EpiGap, Examples) {
  EXPECT_NEAR(epi_gap(entropy_power(gaussian_entropy(1.0)),
                      entropy_power(gaussian_entropy(2.0)),
                      entropy_power(gaussian_entropy(3.0))),
              0.0, 1e-12);
  EXPECT_DOUBLE_EQ(epi_gap(1.0, 2.0, 3.5), 0.5);
}

TEST(EpiGap, UniformPlusUniformIsNonnegative) {
  const DiscreteDensity1D u = Uniform(400, 1.0);
  const DiscreteDensity1D tri = convolve(u, u);
  EXPECT_NEAR(tri.Mass(), 1.0, 1e-12);
  const double gap = epi_gap(entropy_power_of(u), entropy_power_of(u),
                             entropy_power_of(tri));
  EXPECT_GE(gap, -1e-3);
  // Triangle on width 2 has entropy 1/2 nats.
  EXPECT_NEAR(discrete_entropy(tri), 0.5, 1e-2);
}

TEST(Rearrange, CenterOut) {
  const DiscreteDensity1D d = Normalized({0.1, 0.5, 0.2, 0.2}, 1.0);
  const DiscreteDensity1D r = rearrange_decreasing_1d(d);
  // Center cell is index 1, then right, then left.
  EXPECT_DOUBLE_EQ(r.values[1], 0.5);
  EXPECT_DOUBLE_EQ(r.values[2], 0.2);
  EXPECT_DOUBLE_EQ(r.values[0], 0.2);
  EXPECT_DOUBLE_EQ(r.values[3], 0.1);
}

TEST(Rearrange, Idempotent) {
  const DiscreteDensity1D d = Normalized({0.1, 0.2, 0.4, 0.3, 0.05}, 0.5);
  const DiscreteDensity1D once = rearrange_decreasing_1d(d);
  EXPECT_EQ(rearrange_decreasing_1d(once).values, once.values);
}

TEST(Rearrange, PreservesMassAndEntropy) {
  Lcg rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(1 + rng.NextU64() % 200);
    for (double& x : v) x = rng.Uniform() < 0.2 ? 0.0 : rng.Uniform(0.0, 3.0);
    v[0] += 0.1;
    const DiscreteDensity1D d = Normalized(v, rng.Uniform(0.01, 1.0));
    const DiscreteDensity1D r = rearrange_decreasing_1d(d);
    EXPECT_EQ(r.Mass(), d.Mass());
    EXPECT_NEAR(discrete_entropy(r), discrete_entropy(d), 1e-12);
    // Nonincreasing away from the center.
    const std::size_t c = (r.values.size() - 1) / 2;
    for (std::size_t i = c + 1; i < r.values.size(); ++i) {
      EXPECT_LE(r.values[i], r.values[i - 1]);
    }
    for (std::size_t i = c; i-- > 0;) EXPECT_LE(r.values[i], r.values[i + 1]);
  }
}

TEST(DiscreteEntropy, Examples) {
  EXPECT_NEAR(discrete_entropy(Uniform(100, 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(discrete_entropy(Uniform(100, 2.0)), std::log(2.0), 1e-12);

  const double step = 0.01;
  std::vector<double> g;
  for (double x = -10.0; x <= 10.0; x += step) g.push_back(std::exp(-0.5 * x * x));
  EXPECT_NEAR(discrete_entropy(Normalized(g, step)), 1.418939, 1e-3);
}

TEST(DiscreteDensity, Validation) {
  EXPECT_THROW((DiscreteDensity1D{0.0, {1.0}}).Validate(), std::invalid_argument);
  EXPECT_THROW((DiscreteDensity1D{1.0, {0.5}}).Validate(), std::invalid_argument);
  EXPECT_THROW((DiscreteDensity1D{1.0, {1.5, -0.5}}).Validate(),
               std::invalid_argument);
  EXPECT_NO_THROW((DiscreteDensity1D{0.5, {1.0, 1.0}}).Validate());
}

TEST(FactorCovariance, Examples) {
  const CovarianceFactor id = factor_covariance(Matrix::Identity(3));
  EXPECT_EQ(id.a.values, Matrix::Identity(3).values);

  const CovarianceFactor f = factor_covariance(Matrix::FromRows({{4, 2}, {2, 5}}));
  EXPECT_NEAR(f.a(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(f.a(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(f.a(1, 0), 1.0, 1e-15);
  EXPECT_NEAR(f.a(1, 1), 2.0, 1e-15);

  try {
    factor_covariance(Matrix::FromRows({{1, 2}, {2, 1}}));
    FAIL() << "expected a decomposition error";
  } catch (const DecompositionError& e) {
    EXPECT_EQ(e.pivot(), 2);
  }
  EXPECT_THROW(factor_covariance(Matrix::FromRows({{1, 0.5}, {0.2, 1}})),
               std::invalid_argument);
}

TEST(FactorCovariance, ReconstructsRandomMatrices) {
  Lcg rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.NextU64() % 4);
    Matrix b(n);
    for (double& v : b.values) v = rng.Uniform(-1.0, 1.0);
    Matrix s(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double v = i == j ? 0.1 : 0.0;
        for (int k = 0; k < n; ++k) v += b(i, k) * b(j, k);
        s(i, j) = v;
      }
    }
    const CovarianceFactor f = factor_covariance(s);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double v = 0.0;
        for (int k = 0; k < n; ++k) v += f.a(i, k) * f.a(j, k);
        EXPECT_NEAR(v, s(i, j), 1e-12);
      }
    }
  }
}

TEST(SumRateBound, InterferenceFree) {
  EXPECT_NEAR(sum_rate_bound_correlated(Matrix::Identity(2), Matrix::Identity(2),
                                        {3, 3}, NoiseSpec::Gaussian({1, 1})),
              std::log(4.0), 1e-15);
  EXPECT_EQ(sum_rate_bound_correlated(Matrix::Identity(2), Matrix::Identity(2),
                                      {0, 0}, NoiseSpec::Gaussian({1, 1})),
            0.0);
}

TEST(SumRateBound, IdentityFactorMatchesIndependentFormula) {
  Lcg rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.NextU64() % 2);
    Matrix h(n);
    for (double& v : h.values) v = rng.Uniform(0.0, 2.0);
    std::vector<double> p(static_cast<std::size_t>(n));
    std::vector<double> noise(static_cast<std::size_t>(n));
    for (double& v : p) v = rng.Uniform(0.0, 5.0);
    for (double& v : noise) v = rng.Uniform(0.2, 2.0);
    double expected = 0.0;
    for (int j = 0; j < n; ++j) {
      double all = 0.0;
      double others = 0.0;
      for (int k = 0; k < n; ++k) {
        const double term = h(j, k) * h(j, k) * p[static_cast<std::size_t>(k)];
        all += term;
        if (k != j) others += term;
      }
      expected += 0.5 * std::log(1.0 + all / (others + noise[static_cast<std::size_t>(j)]));
    }
    EXPECT_NEAR(sum_rate_bound_correlated(h, Matrix::Identity(n), p,
                                          NoiseSpec::Gaussian(noise)),
                expected, 1e-10);
  }
}

TEST(SumRateBound, EntropyPowerNumerator) {
  NoiseSpec noise = NoiseSpec::Gaussian({1.0});
  EXPECT_NEAR(sum_rate_bound_correlated(Matrix::Identity(1), Matrix::Identity(1),
                                        {3.0}, noise, true),
              std::log(2.0), 1e-15);
  noise.entropy_power = {0.5};
  EXPECT_NEAR(sum_rate_bound_correlated(Matrix::Identity(1), Matrix::Identity(1),
                                        {3.0}, noise, true),
              0.5 * std::log(3.5), 1e-15);
}

TEST(JointBound, Examples) {
  EXPECT_NEAR(joint_sum_rate_bound({1.0, std::sqrt(3.0)}, {3.0, 1.0},
                                   Matrix::Identity(2)),
              std::log(7.0), 1e-12);
  EXPECT_EQ(joint_sum_rate_bound({1.0, 1.0}, {0.0, 0.0}, Matrix::Identity(2)), 0.0);
  EXPECT_THROW(joint_sum_rate_bound({1.0, 1.0}, {1.0, 1.0},
                                    Matrix::FromRows({{1, 1}, {1, 1}})),
               std::invalid_argument);
}

TEST(Mmse, Examples) {
  EXPECT_DOUBLE_EQ(mmse_identity_check(1.0, 1.0).analytic, 0.25);
  EXPECT_NEAR(mmse_identity_check(1e-9, 2.0).analytic, 1.0, 1e-8);
  const MmseCheck c = mmse_identity_check(2.0, 3.0);
  EXPECT_NEAR(c.analytic, 3.0 / 14.0, 1e-15);
  EXPECT_NEAR(c.finite_difference, c.analytic, 1e-6);
  EXPECT_THROW(mmse_identity_check(0.0, 1.0), std::invalid_argument);
}

TEST(Mmse, SweepAgreesWithFiniteDifference) {
  for (int e = -10; e <= 10; ++e) {
    const double snr = std::pow(10.0, e / 10.0);
    for (double p : {0.5, 1.0, 4.0}) {
      const MmseCheck c = mmse_identity_check(snr, p);
      EXPECT_NEAR(c.finite_difference, c.analytic, 1e-6);
    }
  }
}

}  // namespace
}  // namespace icmac
