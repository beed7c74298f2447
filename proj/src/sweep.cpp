#include "prothx/sweep.hpp"

#include "prothx/oracle.hpp"
#include "prothx/proth.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

namespace prothx {

namespace {

// Candidates per block; the unit of work handed to a worker and the unit of
// ordered flushing. Large enough that the reorder buffer is not a bottleneck.
constexpr std::uint64_t kOddsPerBlock = 4096;
constexpr std::uint64_t kBlockSpan = 2 * kOddsPerBlock;

std::int64_t elapsed_us_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

Report make_report(const Natural& N, const ProthForm& form, const RegimeCheck& rc,
                   Verdict verdict, std::int64_t elapsed_us) {
  Report report;
  report.input = N;
  report.form = form;
  report.regime = rc;
  report.verdict = std::move(verdict);
  report.test_used = "extended";
  report.elapsed_us = elapsed_us;
  return report;
}

// Runs fn(block_index) for block_index = 0..block_count-1 across the given
// number of threads; fn must be thread-safe.
void run_blocks(std::uint64_t block_count, unsigned workers,
                const std::function<void(std::uint64_t)>& fn) {
  if (workers <= 1 || block_count <= 1) {
    for (std::uint64_t b = 0; b < block_count; ++b) fn(b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= block_count) return;
      fn(b);
    }
  };
  std::vector<std::jthread> pool;
  const unsigned count = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, block_count));
  pool.reserve(count);
  for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
}

std::uint64_t block_count_for(const Natural& start, const Natural& hi) {
  if (hi < start) return 0;
  const Natural width = hi - start + 1;
  const Natural blocks = (width + (kBlockSpan - 1)) / kBlockSpan;
  if (!fits_u64(blocks))
    throw std::invalid_argument("range too wide");
  return to_u64(blocks);
}

}  // namespace

std::uint64_t search_proth_primes(const Natural& lo, const Natural& hi,
                                  const SearchOptions& options,
                                  const std::function<void(const Report&)>& emit) {
  Natural start = lo < 3 ? Natural(3) : lo;
  if (is_even(start)) ++start;
  const std::uint64_t blocks = block_count_for(start, hi);

  TestOptions test_options;
  test_options.witness_cap = options.witness_cap;
  test_options.small_prime_fast_path = true;

  auto scan_block = [&](std::uint64_t b) {
    std::vector<Report> found;
    Natural N = start + Natural(b) * kBlockSpan;
    for (std::uint64_t i = 0; i < kOddsPerBlock && N <= hi; ++i, N += 2) {
      const auto form = decompose(N);
      const RegimeCheck rc = regime(*form);
      if (!rc.cube_ok) continue;
      if (options.new_regime_only && rc.classic_ok) continue;
      const auto t0 = std::chrono::steady_clock::now();
      Verdict verdict = extended_proth_test(N, test_options);
      if (verdict.kind != VerdictKind::Prime) continue;
      found.push_back(make_report(N, *form, rc, std::move(verdict),
                                  elapsed_us_since(t0)));
    }
    return found;
  };

  std::uint64_t emitted = 0;

  if (options.workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b)
      for (const Report& r : scan_block(b)) {
        emit(r);
        ++emitted;
      }
    return emitted;
  }

  // Reorder buffer: blocks finish out of order, reports leave in order.
  // Whoever inserts the block the cursor is waiting on flushes the run of
  // consecutive blocks behind it; the last insertion overall drains the rest.
  std::mutex mu;
  std::map<std::uint64_t, std::vector<Report>> pending;
  std::uint64_t next_to_emit = 0;

  run_blocks(blocks, options.workers, [&](std::uint64_t b) {
    std::vector<Report> found = scan_block(b);
    std::scoped_lock lock(mu);
    pending.emplace(b, std::move(found));
    while (!pending.empty() && pending.begin()->first == next_to_emit) {
      for (const Report& r : pending.begin()->second) {
        emit(r);
        ++emitted;
      }
      pending.erase(pending.begin());
      ++next_to_emit;
    }
  });
  return emitted;
}

VerifySummary verify_against_oracle(const Natural& limit, unsigned workers,
                                    unsigned long witness_cap) {
  const Natural start(3);
  const std::uint64_t blocks = block_count_for(start, limit);

  TestOptions test_options;
  test_options.witness_cap = witness_cap;
  test_options.small_prime_fast_path = false;

  std::mutex mu;
  VerifySummary total;

  run_blocks(blocks, workers, [&](std::uint64_t b) {
    VerifySummary local;
    Natural N = start + Natural(b) * kBlockSpan;
    for (std::uint64_t i = 0; i < kOddsPerBlock && N <= limit; ++i, N += 2) {
      const auto form = decompose(N);
      if (!regime(*form).cube_ok) continue;
      ++local.tested;

      const Verdict verdict = extended_proth_test(N, test_options);
      const bool oracle_prime = oracle_is_prime(N);

      switch (verdict.kind) {
        case VerdictKind::Prime:
          ++local.primes;
          if (!oracle_prime) local.disagreements.push_back(N);
          break;
        case VerdictKind::Composite:
          ++local.composites;
          if (verdict.evidence) {
            if (std::holds_alternative<FactorPair>(*verdict.evidence))
              ++local.factor_pairs;
            else if (std::holds_alternative<EulerWitness>(*verdict.evidence))
              ++local.euler_witnesses;
            else if (std::holds_alternative<SharedFactor>(*verdict.evidence))
              ++local.shared_factors;
            else if (std::holds_alternative<PerfectSquare>(*verdict.evidence))
              ++local.perfect_squares;
          }
          if (oracle_prime) local.disagreements.push_back(N);
          break;
        case VerdictKind::Inapplicable:
          // In-regime by construction, so only witness exhaustion lands here.
          ++local.witness_exhausted;
          if (oracle_prime) local.disagreements.push_back(N);
          break;
      }
    }
    std::scoped_lock lock(mu);
    total.tested += local.tested;
    total.primes += local.primes;
    total.composites += local.composites;
    total.factor_pairs += local.factor_pairs;
    total.euler_witnesses += local.euler_witnesses;
    total.shared_factors += local.shared_factors;
    total.perfect_squares += local.perfect_squares;
    total.witness_exhausted += local.witness_exhausted;
    total.disagreements.insert(total.disagreements.end(),
                               local.disagreements.begin(),
                               local.disagreements.end());
  });

  std::sort(total.disagreements.begin(), total.disagreements.end());
  return total;
}

std::string verify_summary_json(const VerifySummary& summary) {
  nlohmann::ordered_json out;
  out["tested"] = summary.tested;
  out["primes"] = summary.primes;
  out["composites"] = summary.composites;
  out["evidence"] = {{"factor_pairs", summary.factor_pairs},
                     {"euler_witnesses", summary.euler_witnesses},
                     {"shared_factors", summary.shared_factors},
                     {"perfect_squares", summary.perfect_squares}};
  out["witness_exhausted"] = summary.witness_exhausted;
  nlohmann::ordered_json bad = nlohmann::ordered_json::array();
  for (const Natural& n : summary.disagreements) bad.push_back(to_decimal(n));
  out["disagreements"] = bad;
  return out.dump();
}

}  // namespace prothx
