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

#include "icmac/region.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "icmac/decoding.h"

namespace icmac {

namespace {

std::vector<int> MaskMembers(SubUserMask mask) {
  std::vector<int> members;
  for (; mask != 0; mask &= mask - 1) members.push_back(std::countr_zero(mask));
  return members;
}

SubUserMask Expand(std::uint32_t compressed, const std::vector<int>& positions) {
  SubUserMask out = 0;
  for (std::size_t t = 0; t < positions.size(); ++t) {
    if ((compressed >> t) & 1U) out |= SubUserMask{1} << positions[t];
  }
  return out;
}

void CheckReceiver(int receiver, int num_users) {
  if (receiver < 0 || receiver >= num_users) {
    throw std::out_of_range("receiver index out of range");
  }
}

// Subset sums over the members of a decoded set, indexed by the compressed
// subset (bit t = t-th member). Built with the lowest-bit recurrence.
void SubsetSums(const std::vector<double>& weights, std::vector<double>& sums) {
  const std::size_t count = std::size_t{1} << weights.size();
  sums.assign(count, 0.0);
  for (std::size_t c = 1; c < count; ++c) {
    const int low = std::countr_zero(c);
    sums[c] = sums[c & (c - 1)] + weights[static_cast<std::size_t>(low)];
  }
}

// Checks the polytope of one decoded set without materializing it.
bool PolytopeHolds(int receiver, SubUserMask decoded, const RateAllocation& r,
                   const PowerAllocation& p, const Channel& ch, double tol,
                   std::vector<double>& signal_sums,
                   std::vector<double>& rate_sums) {
  const int n = ch.num_users();
  const std::vector<int> members = MaskMembers(decoded);
  std::vector<double> signal(members.size());
  std::vector<double> rate(members.size());
  std::uint32_t own_compressed = 0;
  for (std::size_t t = 0; t < members.size(); ++t) {
    const int f = members[t];
    signal[t] = ch.gain(receiver, f / n) * p.flat(f);
    rate[t] = r.flat(f);
    if (f / n == receiver) own_compressed |= 1U << t;
  }
  SubsetSums(signal, signal_sums);
  SubsetSums(rate, rate_sums);
  const double noise = effective_noise(receiver, all_mask(n) & ~decoded, p, ch);
  for (std::size_t c = 1; c < signal_sums.size(); ++c) {
    if ((c & own_compressed) == 0) continue;
    const double rhs = std::log2(1.0 + signal_sums[c] / noise);
    if (rate_sums[c] > rhs + tol) return false;
  }
  return true;
}

struct Candidate {
  double r1 = 0.0;
  double r2 = 0.0;
  std::array<int, 4> split{};
  int option0 = 0;
  int option1 = 0;
};

double Cross(const Candidate& o, const Candidate& a, const Candidate& b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

// Upper-right hull, sorted by r1, starting at the highest-r2 point.
std::vector<Candidate> UpperRightHull(std::vector<Candidate> pts) {
  std::sort(pts.begin(), pts.end(), [](const Candidate& a, const Candidate& b) {
    if (a.r1 != b.r1) return a.r1 < b.r1;
    return a.r2 > b.r2;
  });
  std::vector<Candidate> unique;
  for (const Candidate& c : pts) {
    if (!unique.empty() && unique.back().r1 == c.r1) continue;
    unique.push_back(c);
  }
  std::vector<Candidate> hull;
  for (const Candidate& c : unique) {
    while (hull.size() >= 2) {
      const Candidate& o = hull[hull.size() - 2];
      const Candidate& a = hull.back();
      const double scale = std::max({1.0, std::abs(c.r1 - o.r1),
                                     std::abs(c.r2 - o.r2)});
      if (Cross(o, a, c) >= -1e-12 * scale * scale) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(c);
  }
  std::size_t top = 0;
  for (std::size_t t = 1; t < hull.size(); ++t) {
    if (hull[t].r2 >= hull[top].r2) top = t;
  }
  hull.erase(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(top));
  return hull;
}

// True if `q` lies in the region under the hull (free disposal included).
bool UnderHull(const std::vector<Candidate>& hull, double r1, double r2) {
  if (hull.empty()) return false;
  if (r1 > hull.back().r1) return false;
  if (r1 <= hull.front().r1) return r2 <= hull.front().r2;
  auto it = std::lower_bound(
      hull.begin(), hull.end(), r1,
      [](const Candidate& c, double x) { return c.r1 < x; });
  const Candidate& right = *it;
  const Candidate& left = *(it - 1);
  const double t = (r1 - left.r1) / (right.r1 - left.r1);
  return r2 <= left.r2 + t * (right.r2 - left.r2);
}

}  // namespace

std::vector<SubUserMask> enumerate_decoded_sets(int receiver, int num_users) {
  if (num_users < 1) throw std::invalid_argument("num_users must be >= 1");
  if (num_users > kMaxUsers) {
    throw SizeLimitError("decoded-set enumeration is limited to U <= " +
                         std::to_string(kMaxUsers) + " (2^(U^2-U) sets)");
  }
  CheckReceiver(receiver, num_users);
  const SubUserMask own = own_mask(receiver, num_users);
  const std::vector<int> foreign = MaskMembers(all_mask(num_users) & ~own);
  const std::uint32_t count = 1U << foreign.size();
  std::vector<SubUserMask> sets;
  sets.reserve(count);
  for (std::uint32_t c = 0; c < count; ++c) sets.push_back(own | Expand(c, foreign));
  return sets;
}

PartialMacPolytope partial_mac_constraints(int receiver, SubUserMask decoded,
                                           const PowerAllocation& p,
                                           const Channel& ch) {
  const int n = ch.num_users();
  CheckReceiver(receiver, n);
  const SubUserMask own = own_mask(receiver, n);
  if ((decoded & own) != own || (decoded & ~all_mask(n)) != 0) {
    throw std::invalid_argument("decoded set must contain the own sub-users");
  }
  const std::vector<int> members = MaskMembers(decoded);
  std::vector<double> signal(members.size());
  for (std::size_t t = 0; t < members.size(); ++t) {
    signal[t] = ch.gain(receiver, members[t] / n) * p.flat(members[t]);
  }
  std::vector<double> sums;
  SubsetSums(signal, sums);
  const double noise = effective_noise(receiver, all_mask(n) & ~decoded, p, ch);

  PartialMacPolytope poly{receiver, decoded, {}};
  for (std::size_t c = 1; c < sums.size(); ++c) {
    const SubUserMask subset = Expand(static_cast<std::uint32_t>(c), members);
    if ((subset & own) == 0) continue;
    poly.constraints.push_back(
        {receiver, subset, std::log2(1.0 + sums[c] / noise)});
  }
  return poly;
}

std::uint64_t constraint_count(int num_users) {
  if (num_users < 1) throw std::invalid_argument("num_users must be >= 1");
  if (num_users > 5) {
    throw std::overflow_error("constraint_count overflows beyond U = 5");
  }
  const int bits = num_users * num_users;
  const std::uint64_t full = std::uint64_t{1} << bits;
  const std::uint64_t foreign_only = std::uint64_t{1} << (bits - num_users);
  return static_cast<std::uint64_t>(num_users) * (full - foreign_only);
}

MembershipResult receiver_membership(int receiver, const RateAllocation& r,
                                     const PowerAllocation& p,
                                     const Channel& ch, double tol) {
  const int n = ch.num_users();
  if (r.num_users() != n || p.num_users() != n) {
    throw std::invalid_argument("allocation size does not match the channel");
  }
  std::vector<double> signal_sums;
  std::vector<double> rate_sums;
  for (SubUserMask a : enumerate_decoded_sets(receiver, n)) {
    if (PolytopeHolds(receiver, a, r, p, ch, tol, signal_sums, rate_sums)) {
      return {true, a};
    }
  }
  return {false, std::nullopt};
}

bool ic_membership(const RateAllocation& r, const PowerAllocation& p,
                   const Channel& ch, double tol) {
  for (int i = 0; i < ch.num_users(); ++i) {
    if (!receiver_membership(i, r, p, ch, tol).member) return false;
  }
  return true;
}

BoundarySample boundary_scan_2user(const Channel& ch, double total_power,
                                   int grid_n) {
  if (ch.num_users() != 2) {
    throw std::invalid_argument("boundary_scan_2user needs a 2-user channel");
  }
  if (!(total_power >= 0.0) || !std::isfinite(total_power)) {
    throw std::invalid_argument("total_power must be finite and >= 0");
  }
  if (grid_n < 2) throw std::invalid_argument("grid_n must be >= 2");

  constexpr int kSubUsers = 4;
  const std::vector<ReceiverDecoding> opts0 = receiver_options(0, 2);
  const std::vector<ReceiverDecoding> opts1 = receiver_options(1, 2);
  const std::uint64_t radix = opts0.size();

  if (total_power == 0.0) {
    const DecodingConfig cfg = own_only_config(ch);
    return {{{0.0, 0.0, config_id(cfg, 2), PowerAllocation(2),
              RateAllocation(2)}}};
  }

  // caps[option][flat]; negative marks "not decoded by this option".
  auto option_caps = [&](int receiver, const std::vector<ReceiverDecoding>& opts,
                         const std::array<double, kSubUsers>& power,
                         std::vector<std::array<double, kSubUsers>>& caps) {
    caps.resize(opts.size());
    for (std::size_t a = 0; a < opts.size(); ++a) {
      const ReceiverDecoding& rx = opts[a];
      double floor = ch.noise(receiver);
      for (int f = 0; f < kSubUsers; ++f) {
        if (((rx.decoded >> f) & 1U) == 0) {
          floor += ch.gain(receiver, f / 2) * power[static_cast<std::size_t>(f)];
        }
      }
      caps[a].fill(-1.0);
      double later = 0.0;
      for (std::size_t m = rx.order.size(); m-- > 0;) {
        const int f = rx.order[m];
        const double signal =
            ch.gain(receiver, f / 2) * power[static_cast<std::size_t>(f)];
        caps[a][static_cast<std::size_t>(f)] =
            std::log2(1.0 + signal / (floor + later));
        later += signal;
      }
    }
  };

  auto pair_rates = [](const std::array<double, kSubUsers>& c0,
                       const std::array<double, kSubUsers>& c1) {
    std::array<double, kSubUsers> rate{};
    for (std::size_t f = 0; f < kSubUsers; ++f) {
      double best = std::numeric_limits<double>::infinity();
      if (c0[f] >= 0.0) best = std::min(best, c0[f]);
      if (c1[f] >= 0.0) best = std::min(best, c1[f]);
      rate[f] = best;  // every sub-user is decoded at least by its own receiver
    }
    return rate;
  };

  std::vector<Candidate> hull;
  std::vector<Candidate> pending;
  std::vector<std::array<double, kSubUsers>> caps0;
  std::vector<std::array<double, kSubUsers>> caps1;

  std::array<int, kSubUsers> c{};
  for (c[0] = 0; c[0] <= grid_n; ++c[0]) {
    for (c[1] = 0; c[0] + c[1] <= grid_n; ++c[1]) {
      for (c[2] = 0; c[0] + c[1] + c[2] <= grid_n; ++c[2]) {
        c[3] = grid_n - c[0] - c[1] - c[2];
        std::array<double, kSubUsers> power{};
        for (std::size_t f = 0; f < kSubUsers; ++f) {
          power[f] = total_power * c[f] / grid_n;
        }
        option_caps(0, opts0, power, caps0);
        option_caps(1, opts1, power, caps1);
        for (std::size_t a0 = 0; a0 < opts0.size(); ++a0) {
          for (std::size_t a1 = 0; a1 < opts1.size(); ++a1) {
            const auto rate = pair_rates(caps0[a0], caps1[a1]);
            const double r1 = rate[0] + rate[1];
            const double r2 = rate[2] + rate[3];
            if (UnderHull(hull, r1, r2)) continue;
            pending.push_back({r1, r2, c, static_cast<int>(a0),
                               static_cast<int>(a1)});
            if (pending.size() >= 4096) {
              pending.insert(pending.end(), hull.begin(), hull.end());
              hull = UpperRightHull(std::move(pending));
              pending.clear();
            }
          }
        }
      }
    }
  }
  pending.insert(pending.end(), hull.begin(), hull.end());
  hull = UpperRightHull(std::move(pending));

  BoundarySample sample;
  for (const Candidate& h : hull) {
    BoundaryPoint pt;
    pt.r1 = h.r1;
    pt.r2 = h.r2;
    pt.config_id = static_cast<std::uint64_t>(h.option0) * radix +
                   static_cast<std::uint64_t>(h.option1);
    pt.powers = PowerAllocation(2);
    std::array<double, kSubUsers> power{};
    for (int f = 0; f < kSubUsers; ++f) {
      power[static_cast<std::size_t>(f)] =
          total_power * h.split[static_cast<std::size_t>(f)] / grid_n;
      pt.powers.flat(f) = power[static_cast<std::size_t>(f)];
    }
    std::vector<std::array<double, kSubUsers>> one0;
    std::vector<std::array<double, kSubUsers>> one1;
    option_caps(0, {opts0[static_cast<std::size_t>(h.option0)]}, power, one0);
    option_caps(1, {opts1[static_cast<std::size_t>(h.option1)]}, power, one1);
    const auto rate = pair_rates(one0[0], one1[0]);
    pt.rates = RateAllocation(2);
    for (int f = 0; f < kSubUsers; ++f) {
      pt.rates.flat(f) = rate[static_cast<std::size_t>(f)];
    }
    sample.points.push_back(std::move(pt));
  }
  return sample;
}

}  // namespace icmac
