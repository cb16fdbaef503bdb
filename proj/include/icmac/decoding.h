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

// Enumeration and ranking of decoding configurations.
//
// A receiver option is a (decoded set, SIC order) pair. Options of one
// receiver are ranked lexicographically: decoded sets in increasing mask
// order, and within a set, orders in lexicographic permutation order of the
// flat indices. A configuration id is the mixed-radix number whose digits
// are the receivers' option ranks, receiver 0 most significant.

#ifndef ICMAC_DECODING_H_
#define ICMAC_DECODING_H_

#include <cstdint>
#include <vector>

#include "icmac/model.h"

namespace icmac {

// Sum over decoded sets A containing the receiver's own sub-users of |A|!.
// 38 for U = 2. Throws SizeLimitError when it does not fit in 64 bits.
std::uint64_t receiver_option_count(int num_users);

// receiver_option_count(U)^U; throws SizeLimitError on overflow (U >= 4).
std::uint64_t config_count(int num_users);

// All options of one receiver in rank order. Refuses (SizeLimitError) when
// there are more than `limit` of them.
std::vector<ReceiverDecoding> receiver_options(int receiver, int num_users,
                                               std::uint64_t limit = 1'000'000);

std::uint64_t receiver_option_rank(const ReceiverDecoding& option,
                                   int receiver, int num_users);
ReceiverDecoding receiver_option_from_rank(std::uint64_t rank, int receiver,
                                           int num_users);

std::uint64_t config_id(const DecodingConfig& cfg, int num_users);
DecodingConfig config_from_id(std::uint64_t id, int num_users);

// Members of `decoded` sorted by decreasing gain at `receiver`; ties keep
// increasing flat index.
std::vector<int> strongest_gain_first(int receiver, SubUserMask decoded,
                                      const Channel& ch);

// Every receiver decodes only its own user's sub-users.
DecodingConfig own_only_config(const Channel& ch);

}  // namespace icmac

#endif  // ICMAC_DECODING_H_
