#pragma once

#include <cstdint>

namespace hyperseq {

using SeqIndex = std::uint64_t;
using Generation = std::uint64_t;

inline constexpr Generation kMaxGeneration = 64;
// Row strategies (prefix sums, 2-D recurrence, polytopic recurrence,
// binomial sums) keep O(n) big integers alive.
inline constexpr SeqIndex kMaxLinearIndex = 1'000'000;
// Fast-doubling point queries.
inline constexpr SeqIndex kMaxPointIndex = 1'000'000'000;

inline constexpr std::uint64_t kDefaultEnumerationCap = 40;

// Throw CapacityError naming the cap when exceeded.
void require_generation(Generation r);
void require_linear_index(SeqIndex n);
void require_point_index(SeqIndex n);

}  // namespace hyperseq
