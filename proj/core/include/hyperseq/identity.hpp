#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperseq/engine.hpp"
#include "hyperseq/limits.hpp"
#include "hyperseq/nat.hpp"

namespace hyperseq {

struct CheckResult {
  bool passed = false;
  Int lhs;
  Int rhs;
  SeqIndex n = 0;
  Generation r = 0;
};

// Run-time bounds an identity's domain is intersected with.
struct DomainBounds {
  // Largest board/bracelet length the oracle-backed identities may enumerate.
  std::uint64_t oracle_m_max = kDefaultEnumerationCap;
};

struct IdentitySpec {
  std::string id;
  std::string description;
  std::string anchor;
  std::string domain;  // human-readable, e.g. "r = 1, n >= 3"

  // Returns the violated precondition, or nullopt when (n, r) is admissible.
  std::function<std::optional<std::string>(SeqIndex n, Generation r,
                                           const DomainBounds&)>
      admits;
  // Evaluates both sides exactly. Only called on admissible (n, r).
  std::function<CheckResult(SeqIndex n, Generation r, const Engine&)> check;
};

// All registered identities, ordered by id (I01..I20).
const std::vector<IdentitySpec>& list_identities();

// Throws LookupError for an unknown id.
const IdentitySpec& find_identity(std::string_view id);

// Evaluates one identity at (n, r). Throws LookupError for an unknown id and
// DomainError naming the violated precondition when (n, r) is outside the
// identity's domain. Oracle-backed identities are bounded by the engine's
// enumeration cap.
CheckResult check_identity(std::string_view id, SeqIndex n, Generation r,
                           const Engine& engine = Engine::reference());

struct SuiteOptions {
  SeqIndex n_max = 100;
  Generation r_max = 6;
  std::uint64_t oracle_m_max = 18;
  std::size_t max_counterexamples = 5;
  // Restrict the run to one identity id.
  std::optional<std::string> only;
  bool parallel = true;
};

struct IdentityReport {
  std::string id;
  std::uint64_t checked = 0;
  std::uint64_t failure_count = 0;
  // First max_counterexamples failures, ordered by (n, r).
  std::vector<CheckResult> failures;
  std::chrono::nanoseconds wall_time{0};

  bool passed() const { return failure_count == 0; }
};

struct SuiteReport {
  std::vector<IdentityReport> identities;  // ordered by id

  std::uint64_t total_failures() const;
  bool all_passed() const { return total_failures() == 0; }
};

// Checks every registered identity over its domain intersected with
// n <= n_max, r <= r_max and board length <= oracle_m_max. Failures are data.
// Throws CapacityError if oracle_m_max exceeds the engine's enumeration cap,
// LookupError if `only` names no identity.
SuiteReport run_suite(const SuiteOptions& options,
                      const Engine& engine = Engine::reference());

// Human-oriented multi-line report. Wall times are omitted unless asked for
// so that the default output is reproducible byte for byte.
std::string to_text(const SuiteReport& report, bool with_timing = false);

// One "id status checked failures" line per identity, each followed by its
// counterexample lines "id n r lhs rhs".
std::string to_lines(const SuiteReport& report);

}  // namespace hyperseq
