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


// Entropy-power helpers and the sum-rate bounds built on them. Everything
// here is in nats.

#ifndef ICMAC_EPI_H_
#define ICMAC_EPI_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icmac {

// Dense row-major square matrix.
struct Matrix {
  int size = 0;
  std::vector<double> values;

  Matrix() = default;
  explicit Matrix(int n, double fill = 0.0)
      : size(n), values(static_cast<std::size_t>(n) * n, fill) {}
  static Matrix Identity(int n);
  static Matrix FromRows(const std::vector<std::vector<double>>& rows);

  double& operator()(int r, int c) {
    return values[static_cast<std::size_t>(r * size + c)];
  }
  double operator()(int r, int c) const {
    return values[static_cast<std::size_t>(r * size + c)];
  }
};

// Samples of a density on a uniform grid with spacing `step`.
struct DiscreteDensity1D {
  double step = 1.0;
  std::vector<double> values;

  // Throws std::invalid_argument unless step > 0, values are finite and
  // nonnegative and the mass is 1 within 1e-9.
  void Validate() const;
  double Mass() const;
};

double gaussian_entropy(double variance);
double entropy_power(double entropy_nats, int dimension = 1);
double epi_gap(double nx, double ny, double nsum);

// Same multiset of values placed center-out: the largest in the center cell
// ((size - 1) / 2), then alternately right and left. Ties keep input order.
DiscreteDensity1D rearrange_decreasing_1d(const DiscreteDensity1D& d);

// -sum f ln f * step over positive cells, summed in sorted order so that any
// permutation of the cells gives the identical result.
double discrete_entropy(const DiscreteDensity1D& d);

// Density of the sum of two independent variables on the same grid.
DiscreteDensity1D convolve(const DiscreteDensity1D& a,
                           const DiscreteDensity1D& b);

// entropy_power(discrete_entropy(d)).
double entropy_power_of(const DiscreteDensity1D& d);

class DecompositionError : public std::domain_error {
 public:
  DecompositionError(const std::string& what, int pivot)
      : std::domain_error(what), pivot_(pivot) {}
  int pivot() const { return pivot_; }  // 1-based

 private:
  int pivot_;
};

struct CovarianceFactor {
  Matrix a;                // lower triangular
  std::vector<double> p;   // component powers; all ones from a factorization
};

// Cholesky factor A with A A^T = sigma. Throws DecompositionError naming the
// first nonpositive pivot, or std::invalid_argument for an asymmetric input.
CovarianceFactor factor_covariance(const Matrix& sigma);

struct NoiseSpec {
  std::vector<double> variance;        // N_j
  std::vector<double> entropy_power;   // N_j*; equal to N_j for Gaussian noise

  static NoiseSpec Gaussian(std::vector<double> variance);
};

// h(j, i) is the amplitude gain from transmitter i to receiver j. With
// use_entropy_power, N_j* replaces N_j in the numerator of each term.
double sum_rate_bound_correlated(const Matrix& h, const Matrix& a,
                                 const std::vector<double>& p,
                                 const NoiseSpec& noise,
                                 bool use_entropy_power = false);

// 1/2 ln det(I + Ncov^{-1} s) with s = sum_j h_jj^2 P_j. This is the joint
// determinant value across receivers, an outer-bound quantity.
double joint_sum_rate_bound(const std::vector<double>& h_diag,
                            const std::vector<double>& p, const Matrix& ncov);

struct MmseCheck {
  double analytic = 0.0;           // P / (2 (1 + snr P))
  double finite_difference = 0.0;  // central difference of 1/2 ln(1 + snr P)
};
MmseCheck mmse_identity_check(double snr, double p);

}  // namespace icmac

#endif  // ICMAC_EPI_H_
