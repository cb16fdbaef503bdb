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

#include "icmac/model.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace icmac {

namespace {

void CheckReceiver(int receiver, int num_users) {
  if (receiver < 0 || receiver >= num_users) {
    throw std::out_of_range("receiver index " + std::to_string(receiver) +
                            " outside [0, " + std::to_string(num_users) + ")");
  }
}

}  // namespace

SubUserMask own_mask(int user, int num_users) {
  const SubUserMask row = (SubUserMask{1} << num_users) - 1;
  return row << (user * num_users);
}

SubUserMask all_mask(int num_users) {
  const int bits = num_users * num_users;
  return bits >= 32 ? ~SubUserMask{0} : (SubUserMask{1} << bits) - 1;
}

template <class Tag>
void UserMatrix<Tag>::Validate(const char* what) const {
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string(what) +
                                  " entries must be finite and >= 0");
    }
  }
}

template class UserMatrix<PowerTag>;
template class UserMatrix<RateTag>;

Channel::Channel(int num_users, std::vector<double> gain,
                 std::vector<double> noise)
    : n_(num_users), gain_(std::move(gain)), noise_(std::move(noise)) {
  if (n_ < 1) throw std::invalid_argument("num_users must be >= 1");
  if (gain_.size() != static_cast<std::size_t>(n_) * n_) {
    throw std::invalid_argument("gain must be a num_users x num_users matrix");
  }
  if (noise_.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("noise must have num_users entries");
  }
  for (double g : gain_) {
    if (!std::isfinite(g) || g < 0.0) {
      throw std::invalid_argument("gain entries must be finite and >= 0");
    }
  }
  for (double s : noise_) {
    if (!std::isfinite(s) || s <= 0.0) {
      throw std::invalid_argument("noise entries must be finite and > 0");
    }
  }
}

Channel Channel::FromRows(const std::vector<std::vector<double>>& gain,
                          std::vector<double> noise) {
  const int n = static_cast<int>(gain.size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : gain) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("gain must be a num_users x num_users matrix");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Channel(n, std::move(flat), std::move(noise));
}

double Channel::max_noise() const {
  return *std::max_element(noise_.begin(), noise_.end());
}

Channel Channel::WithScaledNoise(double factor) const {
  std::vector<double> noise = noise_;
  for (double& s : noise) s *= factor;
  return Channel(n_, gain_, std::move(noise));
}

void DecodingConfig::Validate(int num_users) const {
  if (static_cast<int>(receivers.size()) != num_users) {
    throw std::invalid_argument("decoding config needs one entry per receiver");
  }
  const SubUserMask universe = all_mask(num_users);
  for (int i = 0; i < num_users; ++i) {
    const ReceiverDecoding& rx = receivers[static_cast<std::size_t>(i)];
    if ((rx.decoded & ~universe) != 0) {
      throw std::invalid_argument("decoded set has bits beyond U^2 sub-users");
    }
    const SubUserMask own = own_mask(i, num_users);
    if ((rx.decoded & own) != own) {
      throw std::invalid_argument("receiver " + std::to_string(i) +
                                  " must decode all of its own sub-users");
    }
    SubUserMask seen = 0;
    for (int f : rx.order) {
      if (f < 0 || f >= num_users * num_users) {
        throw std::invalid_argument("SIC order entry out of range");
      }
      const SubUserMask bit = SubUserMask{1} << f;
      if ((seen & bit) != 0 || (rx.decoded & bit) == 0) {
        throw std::invalid_argument("receiver " + std::to_string(i) +
                                    " SIC order is not a permutation of its "
                                    "decoded set");
      }
      seen |= bit;
    }
    if (seen != rx.decoded) {
      throw std::invalid_argument("receiver " + std::to_string(i) +
                                  " SIC order misses decoded sub-users");
    }
  }
}

void Scenario::Validate() const {
  if (static_cast<int>(rate_min.size()) != channel.num_users()) {
    throw std::invalid_argument("rate_min must have num_users entries");
  }
  for (double r : rate_min) {
    if (!std::isfinite(r) || r < 0.0) {
      throw std::invalid_argument("rate_min entries must be finite and >= 0");
    }
  }
  if (bandwidth_hz && !(*bandwidth_hz > 0.0)) {
    throw std::invalid_argument("bandwidth_hz must be positive");
  }
  if (power_budget && !(*power_budget > 0.0)) {
    throw std::invalid_argument("power_budget must be positive");
  }
}

double effective_noise(int receiver, SubUserMask interferers,
                       const PowerAllocation& p, const Channel& ch) {
  const int n = ch.num_users();
  CheckReceiver(receiver, n);
  double total = ch.noise(receiver);
  for (SubUserMask m = interferers & all_mask(n); m != 0; m &= m - 1) {
    const int f = std::countr_zero(m);
    total += ch.gain(receiver, f / n) * p.flat(f);
  }
  return total;
}

double sub_user_rate_cap(int receiver, const SubUserId& s,
                         SubUserMask interferers, const PowerAllocation& p,
                         const Channel& ch) {
  const int n = ch.num_users();
  CheckReceiver(receiver, n);
  if ((interferers & s.bit(n)) != 0) {
    throw std::invalid_argument("a sub-user cannot interfere with itself");
  }
  const double signal = ch.gain(receiver, s.user) * p[s];
  return std::log2(1.0 + signal / effective_noise(receiver, interferers, p, ch));
}

SicCaps sic_caps(const DecodingConfig& cfg, const PowerAllocation& p,
                 const Channel& ch) {
  const int n = ch.num_users();
  cfg.Validate(n);
  SicCaps caps(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const ReceiverDecoding& rx = cfg.receivers[static_cast<std::size_t>(i)];
    // Walk the order backwards so the interference of later streams
    // accumulates as a suffix sum.
    const double floor = effective_noise(i, all_mask(n) & ~rx.decoded, p, ch);
    double later = 0.0;
    auto& out = caps[static_cast<std::size_t>(i)];
    out.resize(rx.order.size());
    for (std::size_t m = rx.order.size(); m-- > 0;) {
      const int f = rx.order[m];
      const double signal = ch.gain(i, f / n) * p.flat(f);
      out[m] = {SubUserId::FromFlat(f, n),
                std::log2(1.0 + signal / (floor + later))};
      later += signal;
    }
  }
  return caps;
}

std::vector<double> user_rates(const RateAllocation& r) {
  const int n = r.num_users();
  std::vector<double> totals(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) totals[static_cast<std::size_t>(k)] += r(k, j);
  }
  return totals;
}

double to_bits_per_second(double bits_per_use, double bandwidth_hz) {
  // Complex baseband: one channel use per second per hertz.
  return bits_per_use * bandwidth_hz;
}

}  // namespace icmac
