#pragma once

#include "prothx/natural.hpp"

namespace prothx {

/// Value of a Jacobi or Legendre symbol. Exactly these three values exist.
enum class Sign : int { minus_one = -1, zero = 0, plus_one = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

/// base^exponent mod modulus by most-significant-bit-first square and
/// multiply. Requires modulus >= 2 and nonnegative base/exponent; throws
/// std::invalid_argument otherwise. Result is in [0, modulus).
///
/// No windowing; one squaring plus at most one multiply per exponent bit.
Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);

/// Jacobi symbol (a/n) for odd n >= 1, computed by the binary reciprocity
/// reduction: strip factors of 2 from a (each pair of strips is neutral, an
/// odd count flips the sign when n = 3 or 5 mod 8), swap with a sign flip
/// when both arguments are 3 mod 4, reduce a mod n, repeat. Returns zero
/// iff gcd(a, n) > 1. Throws std::invalid_argument for even or zero n.
Sign jacobi(const Natural& a, const Natural& n);

struct IsqrtResult {
  Natural root;  // floor(sqrt(x))
  bool exact;    // root * root == x

  friend bool operator==(const IsqrtResult&, const IsqrtResult&) = default;
};

/// Exact integer square root. Newton iteration seeded from the bit length
/// (first guess strictly above the true root, so the sequence decreases
/// monotonically onto the floor); termination is checked against
/// root^2 <= x < (root+1)^2 before returning. Requires x >= 0.
IsqrtResult isqrt(const Natural& x);

/// True iff x is a perfect square. Agrees with isqrt(x).exact by definition.
bool is_perfect_square(const Natural& x);

}  // namespace prothx
