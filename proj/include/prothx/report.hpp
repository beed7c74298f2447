#pragma once

#include "prothx/bls.hpp"
#include "prothx/natural.hpp"
#include "prothx/proth.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace prothx {

/// Everything a power-of-p run adds to a report. `outcome` carries the
/// prime/inconclusive result; `base` is set when a single proving base is
/// known; `bases_tried` only when a base search ran.
struct BlsReportData {
  Natural m;
  Natural p;
  unsigned long z = 0;
  bool p_verified = false;
  BlsOutcome outcome{BlsOutcome::Kind::Inconclusive, std::nullopt};
  std::optional<Natural> base;
  std::optional<unsigned long> bases_tried;

  bool operator==(const BlsReportData&) const = default;
};

/// One tested number, fully described. `verdict` is set for the Proth-style
/// and oracle paths; `bls` replaces it for power-of-p runs (those two are
/// mutually exclusive). `elapsed_us` is wall time; it participates in
/// operator== and round-trips through JSON, so comparisons that want
/// determinism must strip it first.
struct Report {
  Natural input;
  std::optional<ProthForm> form;
  std::optional<RegimeCheck> regime;
  std::optional<Verdict> verdict;
  std::optional<BlsReportData> bls;
  std::string test_used;
  std::int64_t elapsed_us = 0;

  bool operator==(const Report&) const = default;
};

/// Single-line JSON object, bignums as decimal strings, stable key order.
std::string to_json_line(const Report& report);

/// Human-readable one-liner (no timing, stable across runs).
std::string to_human_line(const Report& report);

/// Inverse of to_json_line. Throws std::invalid_argument on malformed input.
Report parse_json_line(const std::string& line);

}  // namespace prothx
