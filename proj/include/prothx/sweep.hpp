#pragma once

#include "prothx/natural.hpp"
#include "prothx/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace prothx {

struct SearchOptions {
  bool new_regime_only = false;  // drop candidates the classical test covers
  unsigned workers = 1;
  unsigned long witness_cap = 1000;
};

/// Scans odd N in [lo, hi] (lo is clamped up to 3), keeps those inside the
/// cube regime, tests them, and calls emit for every proven prime, in
/// ascending order regardless of worker count. Returns the number of
/// primes emitted. Composites are discarded, so the small-prime fast path
/// is enabled here.
std::uint64_t search_proth_primes(const Natural& lo, const Natural& hi,
                                  const SearchOptions& options,
                                  const std::function<void(const Report&)>& emit);

/// Tally of one verification sweep. A disagreement is a definite verdict
/// (Prime/Composite) that contradicts the oracle, or an exhausted witness
/// search on a number the oracle calls prime. Exhaustion on a composite
/// is counted but is not a disagreement: no claim was made.
struct VerifySummary {
  std::uint64_t tested = 0;
  std::uint64_t primes = 0;
  std::uint64_t composites = 0;
  std::uint64_t factor_pairs = 0;
  std::uint64_t euler_witnesses = 0;
  std::uint64_t shared_factors = 0;
  std::uint64_t perfect_squares = 0;
  std::uint64_t witness_exhausted = 0;
  std::vector<Natural> disagreements;  // ascending

  bool operator==(const VerifySummary&) const = default;
};

/// Runs the extended test on every in-regime odd N <= limit and compares
/// each verdict against the trial-division oracle. The fast path stays off
/// so the evidence tallies reflect the full pipeline.
VerifySummary verify_against_oracle(const Natural& limit, unsigned workers,
                                    unsigned long witness_cap = 1000);

std::string verify_summary_json(const VerifySummary& summary);

}  // namespace prothx
