#include <iomanip>
#include <sstream>

#include "hyperseq/identity.hpp"

namespace hyperseq {

std::string to_text(const SuiteReport& report, bool with_timing) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "id" << std::setw(8) << "status"
     << std::setw(10) << "checked" << "failures";
  if (with_timing) os << "  time_ms";
  os << '\n';
  for (const auto& id : report.identities) {
    os << std::setw(6) << id.id << std::setw(8)
       << (id.passed() ? "pass" : "FAIL") << std::setw(10) << id.checked
       << id.failure_count;
    if (with_timing) {
      os << "  " << std::fixed << std::setprecision(3)
         << static_cast<double>(id.wall_time.count()) / 1e6;
    }
    os << '\n';
    for (const auto& f : id.failures) {
      os << "    counterexample n = " << f.n << ", r = " << f.r
         << ": lhs = " << f.lhs << ", rhs = " << f.rhs << '\n';
    }
  }
  os << report.identities.size() << " identities, " << report.total_failures()
     << " failures\n";
  return os.str();
}

std::string to_lines(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& id : report.identities) {
    os << id.id << ' ' << (id.passed() ? "pass" : "fail") << ' ' << id.checked
       << ' ' << id.failure_count << '\n';
    for (const auto& f : id.failures) {
      os << id.id << ' ' << f.n << ' ' << f.r << ' ' << f.lhs << ' ' << f.rhs
         << '\n';
    }
  }
  return os.str();
}

}  // namespace hyperseq
