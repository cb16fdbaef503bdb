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

#include "icmac/decoding.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "icmac/region.h"

namespace icmac {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

bool MulOverflows(std::uint64_t a, std::uint64_t b) {
  return a != 0 && b > kU64Max / a;
}

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) {
    if (MulOverflows(f, static_cast<std::uint64_t>(i))) {
      throw SizeLimitError("factorial overflow");
    }
    f *= static_cast<std::uint64_t>(i);
  }
  return f;
}

std::vector<int> MaskMembers(SubUserMask mask) {
  std::vector<int> members;
  for (; mask != 0; mask &= mask - 1) members.push_back(std::countr_zero(mask));
  return members;
}

// Lexicographic rank of `order` among permutations of its sorted members.
std::uint64_t PermutationRank(const std::vector<int>& order) {
  const int len = static_cast<int>(order.size());
  std::uint64_t rank = 0;
  for (int m = 0; m < len; ++m) {
    std::uint64_t smaller_later = 0;
    for (int t = m + 1; t < len; ++t) {
      if (order[static_cast<std::size_t>(t)] < order[static_cast<std::size_t>(m)]) {
        ++smaller_later;
      }
    }
    rank += smaller_later * Factorial(len - 1 - m);
  }
  return rank;
}

std::vector<int> PermutationFromRank(std::vector<int> sorted,
                                     std::uint64_t rank) {
  std::vector<int> order;
  order.reserve(sorted.size());
  while (!sorted.empty()) {
    const std::uint64_t block = Factorial(static_cast<int>(sorted.size()) - 1);
    const std::size_t pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    order.push_back(sorted[pick]);
    sorted.erase(sorted.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return order;
}

void CheckUsers(int num_users) {
  if (num_users < 1 || num_users > kMaxUsers) {
    throw SizeLimitError("decoding enumeration supports 1.." +
                         std::to_string(kMaxUsers) + " users");
  }
}

}  // namespace

std::uint64_t receiver_option_count(int num_users) {
  CheckUsers(num_users);
  std::uint64_t total = 0;
  for (SubUserMask a : enumerate_decoded_sets(0, num_users)) {
    const std::uint64_t f = Factorial(std::popcount(a));
    if (total > kU64Max - f) throw SizeLimitError("option count overflow");
    total += f;
  }
  return total;
}

std::uint64_t config_count(int num_users) {
  const std::uint64_t per_receiver = receiver_option_count(num_users);
  std::uint64_t total = 1;
  for (int i = 0; i < num_users; ++i) {
    if (MulOverflows(total, per_receiver)) {
      throw SizeLimitError("configuration count does not fit in 64 bits");
    }
    total *= per_receiver;
  }
  return total;
}

std::vector<ReceiverDecoding> receiver_options(int receiver, int num_users,
                                               std::uint64_t limit) {
  const std::uint64_t count = receiver_option_count(num_users);
  if (count > limit) {
    throw SizeLimitError("receiver has " + std::to_string(count) +
                         " decoding options, above the limit of " +
                         std::to_string(limit));
  }
  std::vector<ReceiverDecoding> options;
  options.reserve(static_cast<std::size_t>(count));
  for (SubUserMask a : enumerate_decoded_sets(receiver, num_users)) {
    std::vector<int> order = MaskMembers(a);
    do {
      options.push_back({a, order});
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return options;
}

std::uint64_t receiver_option_rank(const ReceiverDecoding& option,
                                   int receiver, int num_users) {
  std::uint64_t offset = 0;
  for (SubUserMask a : enumerate_decoded_sets(receiver, num_users)) {
    if (a == option.decoded) return offset + PermutationRank(option.order);
    offset += Factorial(std::popcount(a));
  }
  throw std::invalid_argument("decoded set does not contain the own sub-users");
}

ReceiverDecoding receiver_option_from_rank(std::uint64_t rank, int receiver,
                                           int num_users) {
  for (SubUserMask a : enumerate_decoded_sets(receiver, num_users)) {
    const std::uint64_t block = Factorial(std::popcount(a));
    if (rank < block) return {a, PermutationFromRank(MaskMembers(a), rank)};
    rank -= block;
  }
  throw std::out_of_range("receiver option rank out of range");
}

std::uint64_t config_id(const DecodingConfig& cfg, int num_users) {
  cfg.Validate(num_users);
  const std::uint64_t radix = receiver_option_count(num_users);
  config_count(num_users);  // overflow check
  std::uint64_t id = 0;
  for (int i = 0; i < num_users; ++i) {
    id = id * radix + receiver_option_rank(
                          cfg.receivers[static_cast<std::size_t>(i)], i,
                          num_users);
  }
  return id;
}

DecodingConfig config_from_id(std::uint64_t id, int num_users) {
  const std::uint64_t radix = receiver_option_count(num_users);
  if (id >= config_count(num_users)) {
    throw std::out_of_range("configuration id out of range");
  }
  DecodingConfig cfg;
  cfg.receivers.resize(static_cast<std::size_t>(num_users));
  for (int i = num_users - 1; i >= 0; --i) {
    cfg.receivers[static_cast<std::size_t>(i)] =
        receiver_option_from_rank(id % radix, i, num_users);
    id /= radix;
  }
  return cfg;
}

std::vector<int> strongest_gain_first(int receiver, SubUserMask decoded,
                                      const Channel& ch) {
  const int n = ch.num_users();
  std::vector<int> order = MaskMembers(decoded);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ch.gain(receiver, a / n) > ch.gain(receiver, b / n);
  });
  return order;
}

DecodingConfig own_only_config(const Channel& ch) {
  const int n = ch.num_users();
  DecodingConfig cfg;
  for (int i = 0; i < n; ++i) {
    const SubUserMask own = own_mask(i, n);
    cfg.receivers.push_back({own, strongest_gain_first(i, own, ch)});
  }
  return cfg;
}

}  // namespace icmac
