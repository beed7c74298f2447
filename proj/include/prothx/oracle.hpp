#pragma once

#include "prothx/natural.hpp"

#include <vector>

namespace prothx {

struct PrimePower {
  Natural prime;
  unsigned multiplicity;

  bool operator==(const PrimePower&) const = default;
};

/// Complete factorization; primes strictly increasing.
struct Factorization {
  std::vector<PrimePower> factors;

  Natural product() const;

  bool operator==(const Factorization&) const = default;
};

/// Trial division over 2, 3, then 6k+-1 up to the integer square root.
/// Deterministic ground truth, intended for inputs up to about 10^14;
/// throws std::invalid_argument beyond 64 bits.
bool oracle_is_prime(const Natural& n);

/// Full factorization by trial division. Requires n >= 2, desk scale.
Factorization oracle_factor(const Natural& n);

/// Multiplicative order of a modulo n: the smallest e >= 1 with a^e = 1
/// (mod n). Requires gcd(a, n) == 1 and n >= 2, desk scale. Direct stepping
/// for n <= 10^5, divisor enumeration over the Carmichael function above.
Natural oracle_order(const Natural& a, const Natural& n);

}  // namespace prothx
