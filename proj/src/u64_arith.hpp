#pragma once

// Fixed-width helpers for the desk-scale oracle paths. Internal to the
// library; the public surface speaks Natural throughout.

#include <cstdint>

namespace prothx::detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1) result = mulmod_u64(result, base, modulus);
    base = mulmod_u64(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

}  // namespace prothx::detail
