#include "prothx/bls.hpp"
#include "prothx/natural.hpp"
#include "prothx/oracle.hpp"
#include "prothx/proth.hpp"
#include "prothx/report.hpp"
#include "prothx/sweep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

// Exit codes: 0 verdict delivered (prime or composite) or clean sweep,
// 2 usage error, 3 test inapplicable, 4 power-of-p test inconclusive,
// 5 verification sweep found a disagreement. 1 is reserved for internal
// failures that indicate a bug, not bad input.

namespace {

using namespace prothx;

constexpr unsigned long kMaxPairExponent = 1ul << 24;
constexpr unsigned kMaxWorkers = 256;
const Natural kMaxSweepWidth("10000000000");  // widest search/verify span

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

std::optional<Natural> parse_value(const std::string& text, bool allow_hex,
                                   const char* what) {
  auto value = parse_natural(text, allow_hex);
  if (!value)
    std::cerr << "error: " << what << " is not a valid number: " << text << "\n";
  return value;
}

std::int64_t elapsed_us_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void print_report(const Report& report, bool json) {
  std::cout << (json ? to_json_line(report) : to_human_line(report)) << "\n";
}

int exit_code_for(const Report& report) {
  if (report.bls)
    return report.bls->outcome.kind == BlsOutcome::Kind::Prime ? 0 : 4;
  if (report.verdict && report.verdict->kind == VerdictKind::Inapplicable) return 3;
  return 0;
}

// Trial-division verdict for numbers the main test cannot handle. Prime
// carries no witness base here; composite evidence is the smallest factor.
Verdict oracle_verdict(const Natural& N) {
  if (oracle_is_prime(N))
    return Verdict{VerdictKind::Prime, std::nullopt, std::nullopt, std::nullopt};
  const Factorization f = oracle_factor(N);
  return Verdict::composite(SharedFactor{f.factors.front().prime});
}

int run_extended(const Natural& N, const std::optional<Natural>& forced_base,
                 bool oracle_fallback, unsigned long witness_cap, bool json) {
  if (witness_cap < 2) return usage_error("witness cap must be at least 2");

  Report report;
  report.input = N;
  report.test_used = "extended";
  if (const auto form = decompose(N)) {
    report.form = *form;
    report.regime = regime(*form);
  }

  TestOptions options;
  options.witness_cap = witness_cap;

  const auto t0 = std::chrono::steady_clock::now();
  try {
    report.verdict = forced_base
                         ? extended_proth_test_with_base(N, *forced_base, options)
                         : extended_proth_test(N, options);
  } catch (const std::invalid_argument& err) {
    return usage_error(err.what());
  }

  if (oracle_fallback && report.verdict->kind == VerdictKind::Inapplicable) {
    if (N < 2) return usage_error("oracle fallback requires N >= 2");
    if (!fits_u64(N))
      return usage_error("oracle fallback is limited to inputs below 2^64");
    report.verdict = oracle_verdict(N);
    report.test_used = "oracle";
  }
  report.elapsed_us = elapsed_us_since(t0);

  print_report(report, json);
  return exit_code_for(report);
}

int run_search(const Natural& lo, const Natural& hi, const SearchOptions& options,
               bool json) {
  if (hi < lo) return usage_error("search range is empty: hi < lo");
  if (hi - lo > kMaxSweepWidth)
    return usage_error("search range wider than 10^10");
  if (options.witness_cap < 2) return usage_error("witness cap must be at least 2");

  const std::uint64_t found = search_proth_primes(
      lo, hi, options, [&](const Report& report) { print_report(report, json); });
  std::cerr << "found " << found << " primes in [" << to_decimal(lo) << ", "
            << to_decimal(hi) << "]\n";
  return 0;
}

int run_bls(const Natural& N, const Natural& m, const Natural& p, unsigned long z,
            const std::optional<Natural>& base, unsigned long base_limit, bool json) {
  BlsInstance inst;
  try {
    inst = make_bls_instance(N, m, p, z);
  } catch (const std::invalid_argument& err) {
    return usage_error(err.what());
  }

  Report report;
  report.input = N;
  report.test_used = "bls";

  BlsReportData data;
  data.m = inst.m;
  data.p = inst.p;
  data.z = inst.z;
  data.p_verified = inst.p_verified;

  const auto t0 = std::chrono::steady_clock::now();
  if (base) {
    try {
      data.outcome = bls_power_test(inst, *base);
    } catch (const std::invalid_argument& err) {
      return usage_error(err.what());
    }
    if (data.outcome.kind == BlsOutcome::Kind::Prime) data.base = *base;
  } else {
    const BlsSearchResult result = bls_search(inst, base_limit);
    data.outcome = result.outcome;
    data.base = result.base;
    data.bases_tried = result.bases_tried;
  }
  report.elapsed_us = elapsed_us_since(t0);
  report.bls = std::move(data);

  print_report(report, json);
  return exit_code_for(report);
}

int run_verify(const Natural& limit, unsigned workers, unsigned long witness_cap,
               bool json) {
  if (limit > kMaxSweepWidth) return usage_error("verify limit above 10^10");
  if (witness_cap < 2) return usage_error("witness cap must be at least 2");

  const VerifySummary summary = verify_against_oracle(limit, workers, witness_cap);

  if (json) {
    std::cout << verify_summary_json(summary) << "\n";
  } else {
    std::cout << "tested " << summary.tested << " candidates up to "
              << to_decimal(limit) << "\n"
              << "primes " << summary.primes << ", composites " << summary.composites
              << ", witness exhausted " << summary.witness_exhausted << "\n"
              << "evidence: factor pairs " << summary.factor_pairs
              << ", euler witnesses " << summary.euler_witnesses
              << ", shared factors " << summary.shared_factors
              << ", perfect squares " << summary.perfect_squares << "\n";
    if (summary.disagreements.empty()) {
      std::cout << "disagreements: none\n";
    } else {
      std::cout << "disagreements:";
      for (const Natural& n : summary.disagreements)
        std::cout << " " << to_decimal(n);
      std::cout << "\n";
    }
  }
  return summary.disagreements.empty() ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primality testing for k * 2^n + 1 in the regime 2^n > N^(1/3)"};
  app.require_subcommand(1);

  bool json = false;
  bool allow_hex = false;
  bool oracle_fallback = false;
  bool new_regime_only = false;
  unsigned workers = 1;
  unsigned long witness_cap = 1000;
  unsigned long base_limit = 50;
  unsigned long exponent = 0;
  unsigned long z = 0;
  std::string n_text, k_text, lo_text, hi_text, m_text, p_text, base_text;
  std::string limit_text = "2000000";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "emit one JSON object per line");
    cmd->add_flag("--hex", allow_hex, "accept 0x-prefixed hexadecimal input");
  };

  CLI::App* test_cmd = app.add_subcommand("test", "test one number");
  test_cmd->add_option("N", n_text, "the number to test")->required();
  test_cmd->add_option("--base", base_text,
                       "use this witness base instead of searching for one");
  test_cmd->add_option("--witness-cap", witness_cap,
                       "largest base the witness search may try");
  test_cmd->add_flag("--oracle-fallback", oracle_fallback,
                     "fall back to trial division when the test does not apply");
  add_common(test_cmd);

  CLI::App* pair_cmd = app.add_subcommand("pair", "test N = k * 2^n + 1 given k and n");
  pair_cmd->add_option("k", k_text, "odd multiplier")->required();
  pair_cmd->add_option("n", exponent, "power of two")->required();
  pair_cmd->add_option("--base", base_text,
                       "use this witness base instead of searching for one");
  pair_cmd->add_option("--witness-cap", witness_cap,
                       "largest base the witness search may try");
  pair_cmd->add_flag("--oracle-fallback", oracle_fallback,
                     "fall back to trial division when the test does not apply");
  add_common(pair_cmd);

  CLI::App* search_cmd =
      app.add_subcommand("search", "list proven primes in a range");
  search_cmd->add_option("lo", lo_text, "range start")->required();
  search_cmd->add_option("hi", hi_text, "range end (inclusive)")->required();
  search_cmd->add_flag("--new-regime-only", new_regime_only,
                       "only candidates the classical test cannot handle");
  search_cmd->add_option("--workers", workers, "worker threads");
  search_cmd->add_option("--witness-cap", witness_cap,
                         "largest base the witness search may try");
  add_common(search_cmd);

  CLI::App* bls_cmd =
      app.add_subcommand("bls", "power-of-p test for N = m * p^z + 1");
  bls_cmd->add_option("N", n_text, "the number to test")->required();
  bls_cmd->add_option("m", m_text, "cofactor m")->required();
  bls_cmd->add_option("p", p_text, "prime p")->required();
  bls_cmd->add_option("z", z, "exponent z")->required();
  CLI::Option* base_opt =
      bls_cmd->add_option("--base", base_text, "try exactly this base");
  CLI::Option* limit_opt = bls_cmd->add_option(
      "--base-limit", base_limit, "try prime bases up to this bound");
  base_opt->excludes(limit_opt);
  add_common(bls_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "compare the test against trial division on every candidate");
  verify_cmd->add_option("limit", limit_text, "sweep all odd N <= limit");
  verify_cmd->add_option("--workers", workers, "worker threads");
  verify_cmd->add_option("--witness-cap", witness_cap,
                         "largest base the witness search may try");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  if (workers < 1 || workers > kMaxWorkers)
    return usage_error("workers must be between 1 and 256");

  try {
    if (*test_cmd) {
      const auto N = parse_value(n_text, allow_hex, "N");
      if (!N) return 2;
      std::optional<Natural> base;
      if (!base_text.empty()) {
        base = parse_value(base_text, allow_hex, "base");
        if (!base) return 2;
      }
      return run_extended(*N, base, oracle_fallback, witness_cap, json);
    }

    if (*pair_cmd) {
      const auto k = parse_value(k_text, allow_hex, "k");
      if (!k) return 2;
      if (exponent < 1 || exponent > kMaxPairExponent)
        return usage_error("n must be between 1 and 2^24");
      const auto form = proth_form_from_pair(*k, exponent);
      if (!form) return usage_error("k must be odd and positive");
      std::optional<Natural> base;
      if (!base_text.empty()) {
        base = parse_value(base_text, allow_hex, "base");
        if (!base) return 2;
      }
      return run_extended(form->N, base, oracle_fallback, witness_cap, json);
    }

    if (*search_cmd) {
      const auto lo = parse_value(lo_text, allow_hex, "lo");
      const auto hi = parse_value(hi_text, allow_hex, "hi");
      if (!lo || !hi) return 2;
      SearchOptions options;
      options.new_regime_only = new_regime_only;
      options.workers = workers;
      options.witness_cap = witness_cap;
      return run_search(*lo, *hi, options, json);
    }

    if (*bls_cmd) {
      const auto N = parse_value(n_text, allow_hex, "N");
      const auto m = parse_value(m_text, allow_hex, "m");
      const auto p = parse_value(p_text, allow_hex, "p");
      if (!N || !m || !p) return 2;
      std::optional<Natural> base;
      if (!base_text.empty()) {
        base = parse_value(base_text, allow_hex, "base");
        if (!base) return 2;
      }
      return run_bls(*N, *m, *p, z, base, base_limit, json);
    }

    if (*verify_cmd) {
      const auto limit = parse_value(limit_text, allow_hex, "limit");
      if (!limit) return 2;
      return run_verify(*limit, workers, witness_cap, json);
    }
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 1;
  }
  return 2;
}
