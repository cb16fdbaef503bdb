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

// Core data model of the U-user Gaussian interference channel with sub-user
// splitting.
//
// Every user k transmits U independently coded sub-user components
// (k, 0) .. (k, U-1), so U^2 streams cross the channel. Receiver i sees
//
//   y_i = sum_k sum_j h_{i,k} x_{k,j} + z_i,    z_i ~ N(0, noise_i)
//
// and only the power gains g[i][k] = |h_{i,k}|^2 ever enter a rate formula,
// so the channel stores those directly. All indices in the library are
// 0-based; the CLI and CSV columns present them 1-based.
//
// Rates in this module (and in region/minpic/timeshare/baseline) are in bits
// per channel use.

#ifndef ICMAC_MODEL_H_
#define ICMAC_MODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace icmac {

// Full subset enumeration is only attempted up to this many users.
inline constexpr int kMaxUsers = 4;

// Default additive slack (bits) used when checking rate constraints.
inline constexpr double kDefaultRateTolerance = 1e-9;

// Thrown when an input would blow up a combinatorial enumeration.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Thrown when no finite power supports the requested rates.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bitmask over the U^2 flat sub-user indices (bit user * U + component).
using SubUserMask = std::uint32_t;

struct SubUserId {
  int user = 0;
  int component = 0;

  int flat(int num_users) const { return user * num_users + component; }
  static SubUserId FromFlat(int flat, int num_users) {
    return {flat / num_users, flat % num_users};
  }
  SubUserMask bit(int num_users) const {
    return SubUserMask{1} << flat(num_users);
  }

  friend bool operator==(const SubUserId&, const SubUserId&) = default;
  friend auto operator<=>(const SubUserId&, const SubUserId&) = default;
};

// Mask with the U components of `user` set.
SubUserMask own_mask(int user, int num_users);
// Mask with all U^2 sub-users set.
SubUserMask all_mask(int num_users);

// U x U nonnegative matrix indexed [user][component]. The tag keeps powers
// and rates from being mixed up at call sites.
template <class Tag>
class UserMatrix {
 public:
  UserMatrix() = default;
  explicit UserMatrix(int num_users, double fill = 0.0)
      : n_(num_users),
        values_(static_cast<std::size_t>(num_users) * num_users, fill) {}

  int num_users() const { return n_; }

  double& operator()(int user, int component) {
    return values_[static_cast<std::size_t>(user * n_ + component)];
  }
  double operator()(int user, int component) const {
    return values_[static_cast<std::size_t>(user * n_ + component)];
  }
  double& operator[](const SubUserId& s) { return (*this)(s.user, s.component); }
  double operator[](const SubUserId& s) const {
    return (*this)(s.user, s.component);
  }

  double& flat(int index) { return values_[static_cast<std::size_t>(index)]; }
  double flat(int index) const {
    return values_[static_cast<std::size_t>(index)];
  }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double total() const {
    double sum = 0.0;
    for (double v : values_) sum += v;
    return sum;
  }

  // Throws std::invalid_argument unless every entry is finite and >= 0.
  void Validate(const char* what) const;

  friend bool operator==(const UserMatrix&, const UserMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> values_;
};

struct PowerTag {};
struct RateTag {};
using PowerAllocation = UserMatrix<PowerTag>;
using RateAllocation = UserMatrix<RateTag>;

class Channel {
 public:
  Channel() = default;
  // `gain` is row-major U x U with row i = receiver i.
  Channel(int num_users, std::vector<double> gain, std::vector<double> noise);
  static Channel FromRows(const std::vector<std::vector<double>>& gain,
                          std::vector<double> noise);

  int num_users() const { return n_; }
  double gain(int receiver, int transmitter) const {
    return gain_[static_cast<std::size_t>(receiver * n_ + transmitter)];
  }
  double noise(int receiver) const {
    return noise_[static_cast<std::size_t>(receiver)];
  }
  double max_noise() const;
  std::span<const double> gains() const { return gain_; }
  std::span<const double> noises() const { return noise_; }

  // Same gains, every noise variance multiplied by `factor`.
  Channel WithScaledNoise(double factor) const;

  friend bool operator==(const Channel&, const Channel&) = default;

 private:
  int n_ = 0;
  std::vector<double> gain_;
  std::vector<double> noise_;
};

// Decoded set and SIC order of one receiver. `order` lists flat sub-user
// indices, first decoded first; it is a permutation of the bits of `decoded`.
struct ReceiverDecoding {
  SubUserMask decoded = 0;
  std::vector<int> order;

  friend bool operator==(const ReceiverDecoding&,
                         const ReceiverDecoding&) = default;
};

struct DecodingConfig {
  std::vector<ReceiverDecoding> receivers;

  // Throws std::invalid_argument if a receiver misses one of its own
  // sub-users or its order is not a permutation of its decoded set.
  void Validate(int num_users) const;

  friend bool operator==(const DecodingConfig&,
                         const DecodingConfig&) = default;
};

struct Scenario {
  Channel channel;
  std::vector<double> rate_min;  // bits per channel use
  std::optional<double> bandwidth_hz;
  std::optional<double> power_budget;

  int num_users() const { return channel.num_users(); }
  void Validate() const;
};

// sigma_i^2 + sum over `interferers` of g[i][k'] p[k'][j'].
double effective_noise(int receiver, SubUserMask interferers,
                       const PowerAllocation& p, const Channel& ch);

// log2(1 + g[i][k] p[k][j] / effective_noise(i, interferers)). `s` must not
// be among the interferers.
double sub_user_rate_cap(int receiver, const SubUserId& s,
                         SubUserMask interferers, const PowerAllocation& p,
                         const Channel& ch);

struct DecodedCap {
  SubUserId sub_user;
  double bits = 0.0;
};

// Per receiver, the rate cap of every decoded sub-user in SIC order. The
// m-th decoded stream sees as interference everything decoded after it plus
// every stream outside the decoded set.
using SicCaps = std::vector<std::vector<DecodedCap>>;
SicCaps sic_caps(const DecodingConfig& cfg, const PowerAllocation& p,
                 const Channel& ch);

// R_k = sum_j r[k][j].
std::vector<double> user_rates(const RateAllocation& r);

// Converts bits per channel use to bits per second when a bandwidth is known.
double to_bits_per_second(double bits_per_use, double bandwidth_hz);

}  // namespace icmac

#endif  // ICMAC_MODEL_H_
