// Brute-force search for the convergence thresholds frozen in
// core/include/hyperseq/convergence_fixture.hpp.
//
// For each r, prints the least n >= 1 with |F_{n+1}^(r)/F_n^(r) - phi| < eps,
// decided by exact integer comparison, and checks that the gap then stays
// below eps over the following window.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hyperseq/golden_ratio.hpp"
#include "hyperseq/sequence.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Derive convergence thresholds n0(r)",
               "hyperseq-derive-thresholds"};
  hyperseq::Generation r_max = 4;
  std::string eps = "1/1000000";
  hyperseq::SeqIndex limit = 2000;
  hyperseq::SeqIndex window = 50;
  app.add_option("--r-max", r_max)->default_val(4);
  app.add_option("--eps", eps)->default_val("1/1000000");
  app.add_option("--search-limit", limit)->default_val(2000);
  app.add_option("--window", window)->default_val(50);
  CLI11_PARSE(app, argc, argv);

  const auto slash = eps.find('/');
  if (slash == std::string::npos) {
    std::cerr << "--eps must look like NUM/DEN\n";
    return 2;
  }
  const auto num = hyperseq::Nat::parse(std::string_view(eps).substr(0, slash));
  const auto den = hyperseq::Nat::parse(std::string_view(eps).substr(slash + 1));

  int status = 0;
  std::cout << "r,n0,window_holds\n";
  for (hyperseq::Generation r = 0; r <= r_max; ++r) {
    const auto row = hyperseq::hyper_fib_cumsum(r, limit + window + 1);
    auto within = [&](hyperseq::SeqIndex n) {
      return hyperseq::ratio_within(row[n + 1], row[n], num, den).within;
    };
    hyperseq::SeqIndex n0 = 1;
    while (n0 <= limit && !within(n0)) ++n0;
    if (n0 > limit) {
      std::cout << r << ",none,false\n";
      status = 1;
      continue;
    }
    bool holds = true;
    for (auto n = n0; n <= n0 + window; ++n) holds = holds && within(n);
    if (!holds) status = 1;
    std::cout << r << ',' << n0 << ',' << (holds ? "true" : "false") << '\n';
  }
  return status;
}
