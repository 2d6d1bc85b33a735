#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <stdexcept>

#include "hyperseq/bfile.hpp"
#include "hyperseq/errors.hpp"
#include "hyperseq/golden_ratio.hpp"
#include "hyperseq/identity.hpp"
#include "hyperseq/sequence.hpp"
#include "hyperseq/tiling.hpp"

namespace hyperseq::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(what + " must be a nonnegative integer, got '" +
                     std::string(text) + "'");
  }
  return v;
}

std::uint64_t enumeration_cap() {
  const char* env = std::getenv("HYPERSEQ_ENUM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  return parse_u64(env, "HYPERSEQ_ENUM_CAP");
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  Generation r = 0;
  SeqIndex from = 0;
  SeqIndex to = 0;
  std::string format = "csv";
  std::string strategy = "cumsum";
};

std::vector<Nat> generate(const GenArgs& a) {
  if (a.from > a.to) throw UsageError("--from must not exceed --to");
  std::vector<Nat> values;
  values.reserve(a.to - a.from + 1);
  auto per_index = [&](const std::function<Nat(Generation, SeqIndex)>& f) {
    for (SeqIndex n = a.from; n <= a.to; ++n) values.push_back(f(a.r, n));
  };
  auto slice = [&](std::vector<Nat> row) {
    values.assign(std::make_move_iterator(row.begin() + static_cast<std::ptrdiff_t>(a.from)),
                  std::make_move_iterator(row.end()));
  };

  if (a.kind == "fib") {
    if (a.strategy == "cumsum") {
      slice(hyper_fib_cumsum(a.r, a.to));
    } else if (a.strategy == "rec") {
      per_index(hyper_fib_rec);
    } else if (a.strategy == "poly") {
      slice(hyper_fib_poly_rec(a.r, a.to));
    } else if (a.strategy == "closed") {
      per_index(hyper_fib_closed);
    } else {
      per_index(hyper_fib_binom_sum);
    }
  } else {
    if (a.strategy == "cumsum") {
      slice(hyper_lucas_cumsum(a.r, a.to));
    } else if (a.strategy == "rec") {
      per_index(hyper_lucas_rec);
    } else if (a.strategy == "closed") {
      per_index(hyper_lucas_closed);
    } else {
      throw UsageError("strategy '" + a.strategy +
                       "' is only available for --kind fib");
    }
  }
  return values;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const auto values = generate(a);
  if (a.format == "csv") out << "n,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const SeqIndex n = a.from + i;
    if (a.format == "csv") {
      out << n << ',' << values[i] << '\n';
    } else if (a.format == "json") {
      out << nlohmann::json{{"n", n}, {"value", values[i].str()}}.dump() << '\n';
    } else {
      out << n << ' ' << values[i] << '\n';
    }
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  SeqIndex n_max = 0;
  Generation r_max = 0;
  std::uint64_t oracle_m_max = 0;
  std::size_t max_counterexamples = 5;
  std::string format = "text";
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  SuiteOptions options;
  options.n_max = a.n_max;
  options.r_max = a.r_max;
  options.oracle_m_max = a.oracle_m_max;
  options.max_counterexamples = a.max_counterexamples;
  if (!a.identity.empty()) options.only = a.identity;
  const auto report = run_suite(options, Engine::reference(enumeration_cap()));
  out << (a.format == "lines" ? to_lines(report) : to_text(report, a.timing));
  return report.all_passed() ? kExitOk : kExitFailed;
}

// ---- enumerate / classify ----------------------------------------------------

struct ShapeArgs {
  std::uint64_t board = 0;
  std::uint64_t bracelet = 0;
  bool is_board = false;
  std::uint64_t min_dominoes = 0;
  bool list = false;
};

int cmd_enumerate(const ShapeArgs& a, std::ostream& out) {
  const auto cap = enumeration_cap();
  std::uint64_t count = 0;
  Nat formula;
  if (a.is_board) {
    BoardEnumerator it(a.board, a.min_dominoes, cap);
    while (auto t = it.next()) {
      ++count;
      if (a.list) out << t->render() << '\n';
    }
    formula = count_board(a.board, a.min_dominoes);
  } else {
    BraceletEnumerator it(a.bracelet, a.min_dominoes, cap);
    while (auto b = it.next()) {
      ++count;
      if (a.list) out << b->render() << '\n';
    }
    formula = count_bracelet(a.bracelet, a.min_dominoes).count;
  }
  out << "enumerated " << count << '\n' << "formula " << formula << '\n';
  return formula == Nat(count) ? kExitOk : kExitFailed;
}

int cmd_classify(const ShapeArgs& a, Generation r, std::ostream& out) {
  const auto cap = enumeration_cap();
  if (a.is_board) {
    const auto c = classify_board_by_last_tile(a.board, r, cap);
    out << "square_ending " << c.square_ending << '\n'
        << "set_a_exactly_r " << c.exactly_r_domino_ending << '\n'
        << "set_b_at_least_r_plus_1 " << c.at_least_r_plus_1_domino_ending
        << '\n'
        << "total " << c.total << '\n';
  } else {
    const auto c = classify_bracelet_by_phase(a.bracelet, r, cap);
    out << "in_phase " << c.in_phase << '\n'
        << "out_of_phase_exactly_r " << c.out_of_phase_exactly_r << '\n'
        << "out_of_phase_at_least_r_plus_1 "
        << c.out_of_phase_at_least_r_plus_1 << '\n'
        << "total " << c.total << '\n';
    for (const auto& [k, v] : c.out_of_phase_histogram) {
      out << "out_of_phase_dominoes " << k << ' ' << v << '\n';
    }
  }
  return kExitOk;
}

// ---- ratio -----------------------------------------------------------------

int cmd_ratio(Generation r, SeqIndex n, const std::string& eps, std::ostream& out) {
  const auto slash = eps.find('/');
  if (slash == std::string::npos) throw UsageError("--eps must look like NUM/DEN");
  const Nat num = Nat::parse(std::string_view(eps).substr(0, slash));
  const Nat den = Nat::parse(std::string_view(eps).substr(slash + 1));
  const auto check = ratio_gap_within(r, n, num, den);
  out << "ratio " << check.gap.numerator << '/' << check.gap.denominator << '\n'
      << "side " << to_string(check.gap.side) << '\n'
      << "eps " << num << '/' << den << '\n'
      << (check.within ? "pass" : "fail") << '\n';
  return check.within ? kExitOk : kExitFailed;
}

// ---- oeis-check --------------------------------------------------------------

int cmd_oeis(const std::string& path, const std::string& kind, Generation r,
             std::int64_t shift, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  const auto entries = parse_bfile(in);
  const auto report = compare_with_reference(
      kind == "fib" ? SequenceKind::fib : SequenceKind::lucas, r, shift, entries);
  out << "compared " << report.compared << " (n = " << report.n_first << ".."
      << report.n_last << ")\n"
      << "matched " << report.matched << '\n';
  if (report.first_mismatch) {
    const auto& m = *report.first_mismatch;
    out << "first_mismatch n " << m.n << " reference_index " << m.reference_index
        << " expected " << m.expected << " actual " << m.actual << '\n';
  }
  return report.full_match() ? kExitOk : kExitFailed;
}

// ---- bench -------------------------------------------------------------------

int cmd_bench(Generation r_max, SeqIndex n, unsigned repeat, std::ostream& out) {
  require_generation(r_max);
  require_linear_index(n);
  if (repeat == 0) throw UsageError("--repeat must be positive");

  struct Strategy {
    const char* name;
    std::function<Nat(Generation)> run;
  };
  const std::vector<Strategy> strategies = {
      {"cumsum", [n](Generation r) { return hyper_fib_cumsum(r, n).back(); }},
      {"rec", [n](Generation r) { return hyper_fib_rec(r, n); }},
      {"poly", [n](Generation r) { return hyper_fib_poly_rec(r, n).back(); }},
      {"closed", [n](Generation r) { return hyper_fib_closed(r, n); }},
      {"binom", [n](Generation r) { return hyper_fib_binom_sum(r, n); }},
  };

  out << "r,strategy,bits,ms_per_call,additions,subtractions,multiplications,"
         "binomials\n";
  bool agree = true;
  for (Generation r = 0; r <= r_max; ++r) {
    std::optional<Nat> reference;
    for (const auto& s : strategies) {
      reset_op_counts();
      Nat value = s.run(r);
      const OpCounts ops = op_counts();
      const auto start = std::chrono::steady_clock::now();
      for (unsigned i = 0; i < repeat; ++i) value = s.run(r);
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      if (!reference) reference = value;
      agree = agree && value == *reference;
      out << r << ',' << s.name << ',' << value.bit_length() << ','
          << std::fixed << std::setprecision(4) << elapsed.count() / repeat
          << ',' << ops.additions << ',' << ops.subtractions << ','
          << ops.multiplications << ',' << ops.binomials << '\n';
    }
  }
  if (!agree) out << "strategies disagree\n";
  return agree ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact hyperfibonacci / hyperlucas sequences, tilings and identities",
               "hyperseq"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print a range of sequence values");
  gen_cmd->add_option("--kind", gen.kind)->required()->check(CLI::IsMember({"fib", "lucas"}));
  gen_cmd->add_option("--r", gen.r, "Generation")->required();
  gen_cmd->add_option("--from", gen.from)->default_val(0);
  gen_cmd->add_option("--to", gen.to)->required();
  gen_cmd->add_option("--format", gen.format)
      ->check(CLI::IsMember({"csv", "json", "bfile"}))
      ->default_val("csv");
  gen_cmd->add_option("--strategy", gen.strategy)
      ->check(CLI::IsMember({"cumsum", "rec", "poly", "closed", "binom"}))
      ->default_val("cumsum");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check registered identities");
  verify_cmd->add_option("--identity", verify.identity, "Single identity id, e.g. I16");
  verify_cmd->add_option("--n-max", verify.n_max)->required();
  verify_cmd->add_option("--r-max", verify.r_max)->required();
  verify_cmd->add_option("--oracle-m-max", verify.oracle_m_max)->required();
  verify_cmd->add_option("--max-counterexamples", verify.max_counterexamples)
      ->default_val(5);
  verify_cmd->add_option("--format", verify.format)
      ->check(CLI::IsMember({"text", "lines"}))
      ->default_val("text");
  verify_cmd->add_flag("--timing", verify.timing, "Include wall time per identity");

  ShapeArgs shape;
  auto add_shape = [&shape](CLI::App* cmd) {
    auto* group = cmd->add_option_group("shape", "Exactly one of --board / --bracelet");
    auto* board = group->add_option("--board", shape.board, "Board length M");
    group->add_option("--bracelet", shape.bracelet, "Bracelet length M");
    group->require_option(1);
    return board;
  };
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate tilings");
  auto* enum_board = add_shape(enum_cmd);
  enum_cmd->add_option("--min-dominoes", shape.min_dominoes)->required();
  enum_cmd->add_flag("--list", shape.list, "Print every tiling");

  Generation classify_r = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Partition tilings by last tile or phase");
  auto* classify_board = add_shape(classify_cmd);
  classify_cmd->add_option("--r", classify_r)->required();

  Generation ratio_r = 0;
  SeqIndex ratio_n = 0;
  std::string ratio_eps;
  auto* ratio_cmd = app.add_subcommand("ratio", "Exact |F_{n+1}/F_n - phi| < eps test");
  ratio_cmd->add_option("--r", ratio_r)->required();
  ratio_cmd->add_option("--n", ratio_n)->required();
  ratio_cmd->add_option("--eps", ratio_eps, "Exact rational NUM/DEN")->required();

  std::string oeis_file;
  std::string oeis_kind;
  Generation oeis_r = 0;
  std::int64_t oeis_shift = 0;
  auto* oeis_cmd = app.add_subcommand("oeis-check", "Compare against a local OEIS b-file");
  oeis_cmd->add_option("--file", oeis_file)->required();
  oeis_cmd->add_option("--kind", oeis_kind)->required()->check(CLI::IsMember({"fib", "lucas"}));
  oeis_cmd->add_option("--r", oeis_r)->required();
  oeis_cmd->add_option("--shift", oeis_shift)->required();

  Generation bench_r_max = 0;
  SeqIndex bench_n = 0;
  unsigned bench_repeat = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time the hyperfibonacci strategies");
  bench_cmd->add_option("--r-max", bench_r_max)->required();
  bench_cmd->add_option("--n", bench_n)->required();
  bench_cmd->add_option("--repeat", bench_repeat)->default_val(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*enum_cmd) {
      shape.is_board = enum_board->count() > 0;
      return cmd_enumerate(shape, out);
    }
    if (*classify_cmd) {
      shape.is_board = classify_board->count() > 0;
      return cmd_classify(shape, classify_r, out);
    }
    if (*ratio_cmd) return cmd_ratio(ratio_r, ratio_n, ratio_eps, out);
    if (*oeis_cmd) return cmd_oeis(oeis_file, oeis_kind, oeis_r, oeis_shift, out);
    if (*bench_cmd) return cmd_bench(bench_r_max, bench_n, bench_repeat, out);
  } catch (const InvariantError& e) {
    err << "hyperseq: invariant violated: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    // Capacity, domain, lookup, parse and usage errors.
    err << "hyperseq: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperseq::cli
