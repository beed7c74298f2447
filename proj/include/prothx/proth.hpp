#pragma once

#include "prothx/natural.hpp"
#include "prothx/ntkernel.hpp"

#include <optional>
#include <variant>

namespace prothx {

/// A validated decomposition N = k * 2^n + 1 with k odd and n >= 1.
struct ProthForm {
  Natural N;
  Natural k;
  unsigned long n;

  bool operator==(const ProthForm&) const = default;
};

/// Canonical decomposition of an odd N >= 3: n is the number of trailing
/// zero bits of N-1 and k = (N-1) / 2^n. Returns nullopt for even or
/// too-small inputs.
std::optional<ProthForm> decompose(const Natural& N);

/// Builds the form from a given (k, n) pair, computing N = k * 2^n + 1.
/// Returns nullopt unless k is odd and positive and n >= 1.
std::optional<ProthForm> proth_form_from_pair(const Natural& k, unsigned long n);

/// Size-regime flags, each an exact integer comparison (no floating-point
/// roots anywhere):
///   cube_ok    2^(3n) > N   the test below applies at all
///   square_ok  2^(2n) > N   the semiprime step can be skipped
///   classic_ok 2^n  > k     the classical test applies
/// The flags are computed independently even though square_ok and
/// classic_ok coincide on valid forms and either implies cube_ok.
struct RegimeCheck {
  bool cube_ok;
  bool square_ok;
  bool classic_ok;

  bool operator==(const RegimeCheck&) const = default;
};

RegimeCheck regime(const ProthForm& form);

/// A recovered semiprime splitting N = p * q with p = 2^n * u + 1 and
/// q = 2^n * v + 1. The pair (u, v) solves u + v = s, u * v = prod where
/// s is the low n bits of k and prod the rest; p * q == N is re-verified
/// by multiplication before any solution is returned.
struct SemiprimeSolution {
  Natural u;
  Natural v;
  Natural p;
  Natural q;
  Natural s;     // k mod 2^n
  Natural prod;  // (k - s) / 2^n

  bool operator==(const SemiprimeSolution&) const = default;
};

/// Vieta read-out of the factor pair, if one exists: forms the discriminant
/// s^2 - 4*prod and accepts iff it is a perfect square giving an integer
/// u >= 1 (u == 0 would only encode the trivial splitting 1 * N). Requires
/// regime(form).cube_ok. A nullopt certifies that no splitting of this
/// shape exists.
std::optional<SemiprimeSolution> semiprime_resolve(const ProthForm& form);

// --- verdicts -------------------------------------------------------------

struct EulerWitness {  // a^((N-1)/2) came out neither +1 nor -1
  Natural base;
  Natural residue;

  bool operator==(const EulerWitness&) const = default;
};

struct SharedFactor {  // gcd with a probe base exposed a factor
  Natural factor;

  bool operator==(const SharedFactor&) const = default;
};

struct FactorPair {  // full semiprime splitting, p * q == N
  Natural p;
  Natural q;

  bool operator==(const FactorPair&) const = default;
};

struct PerfectSquare {  // root * root == N
  Natural root;

  bool operator==(const PerfectSquare&) const = default;
};

using CompositeEvidence = std::variant<EulerWitness, SharedFactor, FactorPair, PerfectSquare>;

enum class VerdictKind { Prime, Composite, Inapplicable };

enum class InapplicableReason {
  NotProthForm,          // even or below 3
  OutsideCubeRegime,     // 2^(3n) <= N
  OutsideClassicRegime,  // 2^n <= k (classical test only)
  WitnessExhausted,      // no base with symbol -1 below the cap
};

/// Outcome of a primality test run. Prime always carries the witness base;
/// Composite always carries evidence; Inapplicable always carries a reason.
struct Verdict {
  VerdictKind kind;
  std::optional<Natural> witness;
  std::optional<CompositeEvidence> evidence;
  std::optional<InapplicableReason> reason;

  static Verdict prime(Natural witness_base);
  static Verdict composite(CompositeEvidence ev, std::optional<Natural> witness_base = {});
  static Verdict inapplicable(InapplicableReason r);

  bool operator==(const Verdict&) const = default;
};

/// Result of scanning for the smallest base a >= 2 with (a/N) = -1.
struct WitnessSearch {
  enum class Kind { Found, SharedFactor, Exhausted };
  Kind kind;
  Natural base;    // Found: the witness; SharedFactor: the probe that hit it
  Natural factor;  // SharedFactor only: gcd(base, N), a nontrivial factor
};

/// Scans a = 2, 3, ... up to cap inclusive. A probe with symbol 0 whose gcd
/// is a nontrivial factor short-circuits the search with that factor.
/// Requires N odd, N >= 3 and N not a perfect square (screen first; every
/// symbol mod a square is 0 or +1, so the scan could never succeed).
WitnessSearch find_witness(const Natural& N, unsigned long cap);

enum class EulerClass { PlusOne, MinusOne, Other };

struct EulerResidue {
  EulerClass cls;
  Natural residue;  // a^((N-1)/2) mod N, verbatim

  bool operator==(const EulerResidue&) const = default;
};

/// Classifies a^((N-1)/2) mod N as 1, N-1, or anything else. For prime N
/// this must match the Jacobi symbol of a; any other outcome proves N
/// composite. Requires N odd >= 3 and 2 <= a < N.
EulerResidue euler_residue(const Natural& N, const Natural& a);

struct TestOptions {
  unsigned long witness_cap = 1000;

  // Probe the primes below 100 as divisors before the witness search. Never
  // changes the Prime/Composite outcome, but composites with a small factor
  // then report SharedFactor instead of the evidence the full pipeline
  // would derive, so bulk scans that discard composites enable it and
  // anything that reports evidence leaves it off.
  bool small_prime_fast_path = false;
};

/// The extended test, applicable whenever 2^(3n) > N: Euler condition on
/// the smallest witness base, then (when 2^(2n) <= N) the semiprime
/// read-out to settle the prime-or-semiprime ambiguity. Biconditional over
/// its regime.
Verdict extended_proth_test(const Natural& N, const TestOptions& options = {});

/// Same pipeline with a caller-chosen base instead of the witness scan.
/// The base must satisfy (base/N) = -1; throws std::invalid_argument
/// otherwise. Exists so tests and harnesses can drive specific bases.
Verdict extended_proth_test_with_base(const Natural& N, const Natural& base,
                                      const TestOptions& options = {});

/// The classical criterion, applicable only when 2^n > k: Euler condition
/// alone, no semiprime step.
Verdict classic_proth_test(const Natural& N, const TestOptions& options = {});

}  // namespace prothx
