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


#include "icmac/epi.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace icmac {

namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

void CheckSquare(const Matrix& m, int n, const char* name) {
  if (m.size != n || static_cast<int>(m.values.size()) != n * n) {
    throw std::invalid_argument(std::string(name) + " must be " +
                                std::to_string(n) + "x" + std::to_string(n));
  }
}

}  // namespace

Matrix Matrix::Identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != n) {
      throw std::invalid_argument("matrix rows must be square");
    }
    for (int c = 0; c < n; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

double DiscreteDensity1D::Mass() const {
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  return std::accumulate(sorted.begin(), sorted.end(), 0.0) * step;
}

void DiscreteDensity1D::Validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("density step must be positive");
  }
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("density values must be finite and >= 0");
    }
  }
  if (std::abs(Mass() - 1.0) > 1e-9) {
    throw std::invalid_argument("density mass must be 1");
  }
}

double gaussian_entropy(double variance) {
  if (!(variance > 0.0)) {
    throw std::invalid_argument("variance must be positive");
  }
  return 0.5 * std::log(kTwoPiE * variance);
}

double entropy_power(double entropy_nats, int dimension) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  return std::exp(2.0 * entropy_nats / dimension) / kTwoPiE;
}

double epi_gap(double nx, double ny, double nsum) { return nsum - (nx + ny); }

DiscreteDensity1D rearrange_decreasing_1d(const DiscreteDensity1D& d) {
  d.Validate();
  const std::size_t n = d.values.size();
  std::vector<double> sorted = d.values;
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
  DiscreteDensity1D out{d.step, std::vector<double>(n, 0.0)};
  if (n == 0) return out;
  const std::ptrdiff_t center = static_cast<std::ptrdiff_t>((n - 1) / 2);
  for (std::size_t t = 0; t < n; ++t) {
    // Offsets 0, +1, -1, +2, -2, ...
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>((t + 1) / 2);
    const std::ptrdiff_t pos = t % 2 == 1 ? center + half : center - half;
    out.values[static_cast<std::size_t>(pos)] = sorted[t];
  }
  return out;
}

double discrete_entropy(const DiscreteDensity1D& d) {
  d.Validate();
  std::vector<double> sorted = d.values;
  std::sort(sorted.begin(), sorted.end());
  double h = 0.0;
  for (double f : sorted) {
    if (f > 0.0) h -= f * std::log(f);
  }
  return h * d.step;
}

DiscreteDensity1D convolve(const DiscreteDensity1D& a,
                           const DiscreteDensity1D& b) {
  a.Validate();
  b.Validate();
  if (a.step != b.step) {
    throw std::invalid_argument("convolved densities need the same step");
  }
  if (a.values.empty() || b.values.empty()) {
    throw std::invalid_argument("convolved densities must be nonempty");
  }
  DiscreteDensity1D out{a.step,
                        std::vector<double>(a.values.size() + b.values.size() - 1, 0.0)};
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    for (std::size_t j = 0; j < b.values.size(); ++j) {
      out.values[i + j] += a.values[i] * b.values[j] * a.step;
    }
  }
  // Renormalize the quadrature so the result is a valid density.
  const double mass = out.Mass();
  for (double& v : out.values) v /= mass;
  return out;
}

double entropy_power_of(const DiscreteDensity1D& d) {
  return entropy_power(discrete_entropy(d), 1);
}

CovarianceFactor factor_covariance(const Matrix& sigma) {
  const int n = sigma.size;
  CheckSquare(sigma, n, "covariance");
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < r; ++c) {
      const double x = sigma(r, c);
      const double y = sigma(c, r);
      if (!std::isfinite(x) || std::abs(x - y) > 1e-12 * std::max(1.0, std::abs(x))) {
        throw std::invalid_argument("covariance must be symmetric");
      }
    }
  }
  CovarianceFactor f{Matrix(n), std::vector<double>(static_cast<std::size_t>(n), 1.0)};
  Matrix& a = f.a;
  for (int j = 0; j < n; ++j) {
    double diag = sigma(j, j);
    for (int k = 0; k < j; ++k) diag -= a(j, k) * a(j, k);
    if (!(diag > 0.0)) {
      throw DecompositionError(
          "covariance is not positive definite at pivot " + std::to_string(j + 1),
          j + 1);
    }
    a(j, j) = std::sqrt(diag);
    for (int i = j + 1; i < n; ++i) {
      double s = sigma(i, j);
      for (int k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / a(j, j);
    }
  }
  return f;
}

NoiseSpec NoiseSpec::Gaussian(std::vector<double> variance) {
  NoiseSpec spec;
  spec.entropy_power = variance;
  spec.variance = std::move(variance);
  return spec;
}

double sum_rate_bound_correlated(const Matrix& h, const Matrix& a,
                                 const std::vector<double>& p,
                                 const NoiseSpec& noise,
                                 bool use_entropy_power) {
  const int k_users = h.size;
  CheckSquare(h, k_users, "H");
  CheckSquare(a, k_users, "A");
  const std::size_t ku = static_cast<std::size_t>(k_users);
  if (p.size() != ku || noise.variance.size() != ku ||
      noise.entropy_power.size() != ku) {
    throw std::invalid_argument("P and noise need one entry per user");
  }
  for (double v : p) {
    if (!(v >= 0.0)) throw std::invalid_argument("powers must be >= 0");
  }
  for (std::size_t j = 0; j < ku; ++j) {
    if (!(noise.variance[j] > 0.0) || !(noise.entropy_power[j] > 0.0)) {
      throw std::invalid_argument("noise terms must be positive");
    }
  }

  double total = 0.0;
  for (int j = 0; j < k_users; ++j) {
    double signal = 0.0;
    for (int k = 0; k < k_users; ++k) {
      double c = 0.0;
      for (int i = 0; i < k_users; ++i) c += h(j, i) * a(i, k);
      signal += c * c * p[static_cast<std::size_t>(k)];
    }
    double interference = 0.0;
    for (int i = 0; i < k_users; ++i) {
      if (i == j) continue;
      for (int k = 0; k < k_users; ++k) {
        interference += h(j, i) * h(j, i) * a(i, k) * a(i, k) *
                        p[static_cast<std::size_t>(k)];
      }
    }
    const double n = noise.variance[static_cast<std::size_t>(j)];
    const double denominator = interference + n;
    if (use_entropy_power) {
      const double n_star = noise.entropy_power[static_cast<std::size_t>(j)];
      total += 0.5 * std::log((signal + n_star) / denominator);
    } else {
      total += 0.5 * std::log1p(signal / denominator);
    }
  }
  return total;
}

double joint_sum_rate_bound(const std::vector<double>& h_diag,
                            const std::vector<double>& p, const Matrix& ncov) {
  const int n = ncov.size;
  CheckSquare(ncov, n, "noise covariance");
  if (h_diag.size() != p.size()) {
    throw std::invalid_argument("h_diag and P must have the same length");
  }
  double s = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!(p[j] >= 0.0)) throw std::invalid_argument("powers must be >= 0");
    s += h_diag[j] * h_diag[j] * p[j];
  }
  CovarianceFactor noise_factor;
  try {
    noise_factor = factor_covariance(ncov);
  } catch (const DecompositionError& e) {
    throw std::invalid_argument(std::string("noise covariance is singular: ") +
                                e.what());
  }
  // det(I + N^-1 s) = det(N + s I) / det(N).
  Matrix shifted = ncov;
  for (int i = 0; i < n; ++i) shifted(i, i) += s;
  const CovarianceFactor shifted_factor = factor_covariance(shifted);
  double log_det = 0.0;
  for (int i = 0; i < n; ++i) {
    log_det += 2.0 * (std::log(shifted_factor.a(i, i)) -
                      std::log(noise_factor.a(i, i)));
  }
  return 0.5 * log_det;
}

MmseCheck mmse_identity_check(double snr, double p) {
  if (!(snr > 0.0) || !(p > 0.0)) {
    throw std::invalid_argument("snr and P must be positive");
  }
  constexpr double kStep = 1e-6;
  auto info = [p](double g) { return 0.5 * std::log1p(g * p); };
  MmseCheck check;
  check.analytic = 0.5 * p / (1.0 + snr * p);
  check.finite_difference = (info(snr + kStep) - info(snr - kStep)) / (2.0 * kStep);
  return check;
}

}  // namespace icmac
