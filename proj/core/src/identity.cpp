#include "hyperseq/identity.hpp"

#include <algorithm>
#include <future>

#include "hyperseq/convergence_fixture.hpp"
#include "hyperseq/errors.hpp"
#include "hyperseq/golden_ratio.hpp"

namespace hyperseq {

namespace {

using Admits = std::function<std::optional<std::string>(SeqIndex, Generation,
                                                        const DomainBounds&)>;

Int z(const Nat& v) { return v.to_int(); }

// (-1)^e by parity.
Int sign_power(std::uint64_t e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

CheckResult result(SeqIndex n, Generation r, Int lhs, Int rhs) {
  CheckResult out;
  out.passed = lhs == rhs;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  out.n = n;
  out.r = r;
  return out;
}

std::int64_t sk(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// ---- domain builders -----------------------------------------------------

Admits any_nr() {
  return [](SeqIndex, Generation, const DomainBounds&) -> std::optional<std::string> {
    return std::nullopt;
  };
}

Admits fixed_r(Generation r_fixed, SeqIndex n_min = 0) {
  return [=](SeqIndex n, Generation r,
             const DomainBounds&) -> std::optional<std::string> {
    if (r != r_fixed) return "requires r = " + std::to_string(r_fixed);
    if (n < n_min) return "requires n >= " + std::to_string(n_min);
    return std::nullopt;
  };
}

Admits min_n_r(SeqIndex n_min, Generation r_min) {
  return [=](SeqIndex n, Generation r,
             const DomainBounds&) -> std::optional<std::string> {
    if (r < r_min) return "requires r >= " + std::to_string(r_min);
    if (n < n_min) return "requires n >= " + std::to_string(n_min);
    return std::nullopt;
  };
}

std::vector<IdentitySpec> build_registry() {
  std::vector<IdentitySpec> reg;

  reg.push_back({
      "I01",
      "F_n^(r) = F_{n-1}^(r) + F_n^(r-1), on closed-form point values",
      "hyperfibonacci recurrence from the definition",
      "n >= 1, r >= 1",
      min_n_r(1, 1),
      [](SeqIndex n, Generation r, const Engine& e) {
        return result(n, r, z(e.hyper_fib_point(r, n)),
                      z(e.hyper_fib_point(r, n - 1) + e.hyper_fib_point(r - 1, n)));
      },
  });

  reg.push_back({
      "I02",
      "F_{n+2}^(1) = F_{n+1}^(1) + F_n^(1) + 1",
      "first-generation recurrence with additive constant",
      "r = 1, n >= 0",
      fixed_r(1),
      [](SeqIndex n, Generation r, const Engine& e) {
        const auto row = e.hyper_fib_row(1, n + 2);
        return result(n, r, z(row[n + 2]), z(row[n + 1] + row[n] + 1));
      },
  });

  reg.push_back({
      "I03",
      "F_{n+2}^(r) = F_{n+1}^(r) + F_n^(r) + C(n + r, r - 1); r = 0 reduces "
      "to Fibonacci since C(n, -1) = 0",
      "polytopic-corrected recurrence",
      "n >= 0, r >= 0",
      any_nr(),
      [](SeqIndex n, Generation r, const Engine& e) {
        const auto row = e.hyper_fib_row(r, n + 2);
        return result(n, r, z(row[n + 2]),
                      z(row[n + 1] + row[n] + e.binom(n + r, sk(r) - 1)));
      },
  });

  reg.push_back({
      "I04",
      "sum_{k=r}^{floor((n+2r)/2)} C(n + 2r - k, k) = F_{n+1}^(r)",
      "binomial count of tilings with at least r dominoes",
      "n >= 0, r >= 0",
      any_nr(),
      [](SeqIndex n, Generation r, const Engine& e) {
        Nat lhs = 0;
        for (std::uint64_t k = r; 2 * k <= n + 2 * r; ++k) {
          lhs += e.binom(n + 2 * r - k, sk(k));
        }
        return result(n, r, z(lhs), z(e.hyper_fib_row(r, n + 1)[n + 1]));
      },
  });

  reg.push_back({
      "I05",
      "F_n^(1) = F_{n+2} - 1",
      "first generation as shifted Fibonacci",
      "r = 1, n >= 0",
      fixed_r(1),
      [](SeqIndex n, Generation r, const Engine& e) {
        return result(n, r, z(e.hyper_fib_row(1, n)[n]), z(e.fib(n + 2)) - 1);
      },
  });

  reg.push_back({
      "I06",
      "1 + sum_{k=0}^n F_k = F_{n+2}",
      "Fibonacci partial sums",
      "r = 0, n >= 0",
      fixed_r(0),
      [](SeqIndex n, Generation r, const Engine& e) {
        Int lhs = 1;
        for (SeqIndex k = 0; k <= n; ++k) lhs += z(e.fib(k));
        return result(n, r, lhs, z(e.fib(n + 2)));
      },
  });

  reg.push_back({
      "I07",
      "3 + n + sum_{k=0}^n F_k^(1) = F_{n+4}",
      "partial sums of the first generation",
      "r = 1, n >= 0",
      fixed_r(1),
      [](SeqIndex n, Generation r, const Engine& e) {
        const auto row = e.hyper_fib_row(1, n);
        Int lhs = 3 + Int(static_cast<unsigned long>(n));
        for (const Nat& v : row) lhs += z(v);
        return result(n, r, lhs, z(e.fib(n + 4)));
      },
  });

  reg.push_back({
      "I08",
      "F_n^(2) = F_{n+4} - n - 3",
      "second generation as shifted Fibonacci",
      "r = 2, n >= 0",
      fixed_r(2),
      [](SeqIndex n, Generation r, const Engine& e) {
        return result(n, r, z(e.hyper_fib_row(2, n)[n]),
                      z(e.fib(n + 4)) - Int(static_cast<unsigned long>(n)) - 3);
      },
  });

  reg.push_back({
      "I09",
      "F_n^(r) = F_{n+2r} - sum_{k=0}^{r-1} C(n + r + k, r - 1 - k)",
      "Fibonacci minus r binomial corrections",
      "n >= 0, r >= 0",
      any_nr(),
      [](SeqIndex n, Generation r, const Engine& e) {
        Int rhs = z(e.fib(n + 2 * r));
        for (Generation k = 0; k < r; ++k) {
          rhs -= z(e.binom(n + r + k, sk(r - 1 - k)));
        }
        return result(n, r, z(e.hyper_fib_row(r, n)[n]), rhs);
      },
  });

  reg.push_back({
      "I10",
      "F_{n+1}^(r) = sum_{k=0}^{floor(n/2)} C(n + r - k, r + k)",
      "pure binomial sum",
      "n >= 0, r >= 0",
      any_nr(),
      [](SeqIndex n, Generation r, const Engine& e) {
        Nat rhs = 0;
        for (SeqIndex k = 0; k <= n / 2; ++k) rhs += e.binom(n + r - k, sk(r + k));
        return result(n, r, z(e.hyper_fib_row(r, n + 1)[n + 1]), z(rhs));
      },
  });

  reg.push_back({
      "I11",
      "F_n = sum_{k=0}^{floor((n-1)/2)} C(n - k - 1, k)",
      "Fibonacci as diagonal binomial sum",
      "r = 0, n >= 1",
      fixed_r(0, 1),
      [](SeqIndex n, Generation r, const Engine& e) {
        Nat rhs = 0;
        for (SeqIndex k = 0; k <= (n - 1) / 2; ++k) rhs += e.binom(n - k - 1, sk(k));
        return result(n, r, z(e.fib(n)), z(rhs));
      },
  });

  reg.push_back({
      "I12",
      "#{(n+2r)-board tilings with >= r dominoes} = F_{n+1}^(r), by enumeration",
      "board tilings count hyperfibonacci numbers",
      "n >= 0, r >= 0, n + 2r <= oracle bound",
      [](SeqIndex n, Generation r,
         const DomainBounds& b) -> std::optional<std::string> {
        if (n + 2 * r > b.oracle_m_max) {
          return "requires n + 2r <= " + std::to_string(b.oracle_m_max);
        }
        return std::nullopt;
      },
      [](SeqIndex n, Generation r, const Engine& e) {
        const auto count = e.board_oracle(n + 2 * r, r);
        return result(n, r, Int(static_cast<unsigned long>(count)),
                      z(e.hyper_fib_row(r, n + 1)[n + 1]));
      },
  });

  reg.push_back({
      "I13",
      "#{(n+2r)-bracelet tilings with >= r dominoes} = L_n^(r), by enumeration",
      "bracelet tilings count hyperlucas numbers",
      "n >= 0, r >= 0, 1 <= n + 2r <= oracle bound",
      [](SeqIndex n, Generation r,
         const DomainBounds& b) -> std::optional<std::string> {
        if (n + 2 * r == 0) return "requires n + 2r >= 1 (no empty bracelet)";
        if (n + 2 * r > b.oracle_m_max) {
          return "requires n + 2r <= " + std::to_string(b.oracle_m_max);
        }
        return std::nullopt;
      },
      [](SeqIndex n, Generation r, const Engine& e) {
        const auto count = e.bracelet_oracle(n + 2 * r, r);
        return result(n, r, Int(static_cast<unsigned long>(count)),
                      z(e.hyper_lucas_row(r, n)[n]));
      },
  });

  reg.push_back({
      "I14",
      "L_n^(r) = F_{n-1}^(r) + F_{n+1}^(r) + C(n + r - 1, r - 1)",
      "hyperlucas from hyperfibonacci",
      "n >= 1, r >= 0",
      min_n_r(1, 0),
      [](SeqIndex n, Generation r, const Engine& e) {
        const auto fibs = e.hyper_fib_row(r, n + 1);
        return result(n, r, z(e.hyper_lucas_row(r, n)[n]),
                      z(fibs[n - 1] + fibs[n + 1] + e.binom(n + r - 1, sk(r) - 1)));
      },
  });

  reg.push_back({
      "I15",
      "L_n = F_{n-1} + F_{n+1}",
      "Lucas from Fibonacci",
      "r = 0, n >= 1",
      fixed_r(0, 1),
      [](SeqIndex n, Generation r, const Engine& e) {
        return result(n, r, z(e.lucas(n)), z(e.fib(n - 1) + e.fib(n + 1)));
      },
  });

  reg.push_back({
      "I16",
      "(F_n^(1))^2 - F_{n-1}^(1) F_{n+1}^(1) = F_{n-3}^(1) + 1 + (-1)^(n+1)",
      "Cassini-like identity for the first generation",
      "r = 1, n >= 3",
      fixed_r(1, 3),
      [](SeqIndex n, Generation r, const Engine& e) {
        const auto f = e.hyper_fib_row(1, n + 1);
        return result(n, r, z(f[n] * f[n]) - z(f[n - 1] * f[n + 1]),
                      z(f[n - 3]) + 1 + sign_power(n + 1));
      },
  });

  reg.push_back({
      "I17",
      "(F_n^(1))^2 - F_{n-2}^(1) F_{n+2}^(1) = F_n^(1) + 1 + (-1)^n",
      "Catalan-like identity for the first generation",
      "r = 1, n >= 2",
      fixed_r(1, 2),
      [](SeqIndex n, Generation r, const Engine& e) {
        const auto f = e.hyper_fib_row(1, n + 2);
        return result(n, r, z(f[n] * f[n]) - z(f[n - 2] * f[n + 2]),
                      z(f[n]) + 1 + sign_power(n));
      },
  });

  reg.push_back({
      "I18",
      "F_{n-1} F_{n+1} - F_n^2 = (-1)^n",
      "Cassini identity",
      "r = 0, n >= 1",
      fixed_r(0, 1),
      [](SeqIndex n, Generation r, const Engine& e) {
        const Nat f = e.fib(n);
        return result(n, r, z(e.fib(n - 1) * e.fib(n + 1)) - z(f * f),
                      sign_power(n));
      },
  });

  reg.push_back({
      "I19",
      "F_n^2 - F_{n-r} F_{n+r} = (-1)^(n-r) F_r^2 (r is the Catalan offset)",
      "Catalan identity",
      "r >= 0, n >= r",
      [](SeqIndex n, Generation r,
         const DomainBounds&) -> std::optional<std::string> {
        if (n < r) return std::string("requires n >= r");
        return std::nullopt;
      },
      [](SeqIndex n, Generation r, const Engine& e) {
        const Nat f = e.fib(n);
        const Nat fr = e.fib(r);
        return result(n, r, z(f * f) - z(e.fib(n - r) * e.fib(n + r)),
                      sign_power(n - r) * z(fr * fr));
      },
  });

  reg.push_back({
      "I20",
      "|F_{n+1}^(r) / F_n^(r) - phi| < 1/10^6 on the window [n0(r), n0(r)+50]; "
      "lhs is 1 when the exact comparison holds, rhs is 1",
      "consecutive-term ratios converge to the golden ratio",
      "r <= 4, n0(r) <= n <= n0(r) + 50",
      [](SeqIndex n, Generation r,
         const DomainBounds&) -> std::optional<std::string> {
        if (r >= fixture::kConvergenceThreshold.size()) {
          return "requires r <= " +
                 std::to_string(fixture::kConvergenceThreshold.size() - 1);
        }
        const auto n0 = fixture::kConvergenceThreshold[r];
        if (n < n0 || n > n0 + fixture::kConvergenceWindow) {
          return "requires " + std::to_string(n0) + " <= n <= " +
                 std::to_string(n0 + fixture::kConvergenceWindow);
        }
        return std::nullopt;
      },
      [](SeqIndex n, Generation r, const Engine& e) {
        const auto row = e.hyper_fib_row(r, n + 1);
        const auto check = ratio_within(row[n + 1], row[n],
                                        fixture::kConvergenceEpsNum,
                                        fixture::kConvergenceEpsDen);
        return result(n, r, Int(check.within ? 1 : 0), Int(1));
      },
  });

  return reg;
}

IdentityReport run_one(const IdentitySpec& spec, const SuiteOptions& options,
                       const DomainBounds& bounds, const Engine& engine) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  report.id = spec.id;
  for (SeqIndex n = 0; n <= options.n_max; ++n) {
    for (Generation r = 0; r <= options.r_max; ++r) {
      if (spec.admits(n, r, bounds)) continue;
      ++report.checked;
      CheckResult res = spec.check(n, r, engine);
      if (!res.passed) {
        ++report.failure_count;
        if (report.failures.size() < options.max_counterexamples) {
          report.failures.push_back(std::move(res));
        }
      }
    }
  }
  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace

const std::vector<IdentitySpec>& list_identities() {
  static const std::vector<IdentitySpec> registry = build_registry();
  return registry;
}

const IdentitySpec& find_identity(std::string_view id) {
  const auto& reg = list_identities();
  auto it = std::find_if(reg.begin(), reg.end(),
                         [&](const IdentitySpec& s) { return s.id == id; });
  if (it == reg.end()) {
    throw LookupError("unknown identity '" + std::string(id) + "'");
  }
  return *it;
}

CheckResult check_identity(std::string_view id, SeqIndex n, Generation r,
                           const Engine& engine) {
  const IdentitySpec& spec = find_identity(id);
  const DomainBounds bounds{engine.enumeration_cap};
  if (auto violation = spec.admits(n, r, bounds)) {
    throw DomainError(spec.id + " at n = " + std::to_string(n) +
                      ", r = " + std::to_string(r) + ": " + *violation);
  }
  return spec.check(n, r, engine);
}

std::uint64_t SuiteReport::total_failures() const {
  std::uint64_t total = 0;
  for (const auto& r : identities) total += r.failure_count;
  return total;
}

SuiteReport run_suite(const SuiteOptions& options, const Engine& engine) {
  if (options.oracle_m_max > engine.enumeration_cap) {
    throw CapacityError("oracle bound " + std::to_string(options.oracle_m_max) +
                        " exceeds the enumeration cap of " +
                        std::to_string(engine.enumeration_cap));
  }
  const DomainBounds bounds{options.oracle_m_max};

  std::vector<const IdentitySpec*> selected;
  if (options.only) {
    selected.push_back(&find_identity(*options.only));
  } else {
    for (const auto& spec : list_identities()) selected.push_back(&spec);
  }

  SuiteReport report;
  if (options.parallel) {
    std::vector<std::future<IdentityReport>> pending;
    pending.reserve(selected.size());
    for (const IdentitySpec* spec : selected) {
      pending.push_back(std::async(std::launch::async, [&, spec] {
        return run_one(*spec, options, bounds, engine);
      }));
    }
    for (auto& f : pending) report.identities.push_back(f.get());
  } else {
    for (const IdentitySpec* spec : selected) {
      report.identities.push_back(run_one(*spec, options, bounds, engine));
    }
  }
  return report;
}

}  // namespace hyperseq
