#pragma once

#include "prothx/natural.hpp"

#include <optional>

namespace prothx {

/// A validated decomposition N = m * p^z + 1 with p prime and z >= 1.
/// p is proven prime by trial division when it is small enough for that
/// to be cheap; beyond 10^7 it is accepted as a trusted assertion and
/// p_verified records which happened.
struct BlsInstance {
  Natural N;
  Natural m;
  Natural p;
  unsigned long z;
  bool p_verified;

  bool operator==(const BlsInstance&) const = default;
};

/// Validates shape and arithmetic (m >= 1, z >= 1, N == m * p^z + 1, N odd)
/// and checks p's primality at desk scale. Throws std::invalid_argument on
/// any violation; the decomposition itself is caller-supplied, nothing here
/// factors N - 1. Even N is rejected because the size-bound argument pins
/// the cofactor of a prime factor only among odd values.
BlsInstance make_bls_instance(const Natural& N, const Natural& m, const Natural& p,
                              unsigned long z);

enum class BlsCondition { SizeBound, FermatCondition, OrderCondition };

/// One-directional outcome: Prime is proven, Inconclusive proves nothing
/// (in particular it does not prove N composite). Inconclusive records the
/// first failing condition in the order size, Fermat, order.
struct BlsOutcome {
  enum class Kind { Prime, Inconclusive };
  Kind kind;
  std::optional<BlsCondition> failed;

  bool operator==(const BlsOutcome&) const = default;
};

/// Checks, in order:
///   (1) (2 * p^z + 1)^2 > N          exact-integer size bound
///       (for p = 2 the sound bound is the tighter (2^z + 1)^2 > N, since
///       2^z + 1 is odd and can itself divide N)
///   (2) a^(N-1)       == 1 (mod N)   Fermat condition
///   (3) a^(m * p^(z-1)) != 1 (mod N)  order condition (z = 1: plain a^m)
/// All three hold: N is prime. Requires 2 <= a < N.
BlsOutcome bls_power_test(const BlsInstance& inst, const Natural& base);

struct BlsSearchResult {
  BlsOutcome outcome;
  std::optional<Natural> base;  // present iff outcome.kind == Prime
  unsigned long bases_tried;
};

/// Tries prime bases 2, 3, 5, 7, ... up to base_limit and returns the first
/// proving base. A size-bound failure returns immediately since no base can
/// recover from it. When every base fails, the reported failure is the one
/// that got furthest through the condition list.
BlsSearchResult bls_search(const BlsInstance& inst, unsigned long base_limit);

}  // namespace prothx
