#pragma once

// Frozen output of `hyperseq-derive-thresholds --r-max 4 --eps 1/1000000`.
//
// For each generation r, the least n >= 1 such that
//   |F_{n+1}^(r) / F_n^(r) - phi| < 1 / 10^6,
// found by exact integer comparison. tests/convergence_fixture_test.cpp
// re-derives these with an independent high-precision float oracle.

#include <array>
#include <cstdint>

namespace hyperseq::fixture {

inline constexpr std::uint64_t kConvergenceEpsNum = 1;
inline constexpr std::uint64_t kConvergenceEpsDen = 1000000;
inline constexpr std::uint64_t kConvergenceWindow = 50;

inline constexpr std::array<std::uint64_t, 5> kConvergenceThreshold = {
    16, 28, 33, 38, 42,
};

}  // namespace hyperseq::fixture
