#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace prothx {

/// Arbitrary-precision nonnegative integer. All arithmetic on it is exact;
/// functions taking a Natural treat a negative value as a precondition
/// violation unless they say otherwise.
using Natural = mpz_class;

inline bool is_odd(const Natural& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }
inline bool is_even(const Natural& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

/// Number of bits in x; bit_length(0) == 0.
inline std::size_t bit_length(const Natural& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

/// Index of the lowest set bit. Requires x > 0.
inline unsigned long trailing_zero_bits(const Natural& x) {
  return static_cast<unsigned long>(mpz_scan1(x.get_mpz_t(), 0));
}

/// x mod 2^bits (the low `bits` bits).
inline Natural low_bits(const Natural& x, unsigned long bits) {
  Natural r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), bits);
  return r;
}

inline Natural pow2(unsigned long exponent) {
  Natural r;
  mpz_setbit(r.get_mpz_t(), exponent);
  return r;
}

inline bool fits_u64(const Natural& x) {
  return sgn(x) >= 0 && mpz_fits_ulong_p(x.get_mpz_t()) != 0;
}

inline std::uint64_t to_u64(const Natural& x) {
  return static_cast<std::uint64_t>(mpz_get_ui(x.get_mpz_t()));
}

inline std::string to_decimal(const Natural& x) { return x.get_str(); }

/// Strict parse of a nonnegative integer literal: decimal digits only, or a
/// 0x/0X-prefixed hex literal when allow_hex is set. No sign, no whitespace,
/// no separators. Returns nullopt on anything else.
std::optional<Natural> parse_natural(std::string_view text, bool allow_hex = false);

}  // namespace prothx
