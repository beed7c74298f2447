#include "prothx/ntkernel.hpp"

#include <stdexcept>

namespace prothx {

Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
  if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  if (sgn(base) < 0 || sgn(exponent) < 0) {
    throw std::invalid_argument("mod_pow: base and exponent must be nonnegative");
  }

  Natural reduced;
  mpz_mod(reduced.get_mpz_t(), base.get_mpz_t(), modulus.get_mpz_t());

  Natural result = 1;
  Natural scratch;  // product before reduction
  const std::size_t bits = bit_length(exponent);
  for (std::size_t i = bits; i-- > 0;) {
    mpz_mul(scratch.get_mpz_t(), result.get_mpz_t(), result.get_mpz_t());
    mpz_mod(result.get_mpz_t(), scratch.get_mpz_t(), modulus.get_mpz_t());
    if (mpz_tstbit(exponent.get_mpz_t(), i)) {
      mpz_mul(scratch.get_mpz_t(), result.get_mpz_t(), reduced.get_mpz_t());
      mpz_mod(result.get_mpz_t(), scratch.get_mpz_t(), modulus.get_mpz_t());
    }
  }
  return result;
}

Sign jacobi(const Natural& a, const Natural& n) {
  if (sgn(n) <= 0 || is_even(n)) throw std::invalid_argument("jacobi: n must be odd and positive");
  if (sgn(a) < 0) throw std::invalid_argument("jacobi: a must be nonnegative");

  Natural top;
  mpz_mod(top.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  Natural bottom = n;

  int sign = 1;
  while (sgn(top) != 0) {
    const unsigned long twos = trailing_zero_bits(top);
    if (twos > 0) {
      mpz_fdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), twos);
      if (twos % 2 == 1) {
        const unsigned long m8 = mpz_fdiv_ui(bottom.get_mpz_t(), 8);
        if (m8 == 3 || m8 == 5) sign = -sign;  // (2/n) = (-1)^((n^2-1)/8)
      }
    }
    // top is odd now; quadratic reciprocity swap
    if (mpz_fdiv_ui(top.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(bottom.get_mpz_t(), 4) == 3) {
      sign = -sign;
    }
    swap(top, bottom);
    mpz_mod(top.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
  }

  if (bottom == 1) return sign > 0 ? Sign::plus_one : Sign::minus_one;
  return Sign::zero;  // a nontrivial common factor survived
}

IsqrtResult isqrt(const Natural& x) {
  if (sgn(x) < 0) throw std::invalid_argument("isqrt: x must be nonnegative");
  if (x < 2) return {x, true};

  // 2^ceil(bits/2) > sqrt(x), so the Newton sequence decreases until it
  // crosses the floor and the first non-decreasing step stops it.
  const std::size_t bits = bit_length(x);
  Natural root = pow2(static_cast<unsigned long>((bits + 1) / 2));
  Natural next;
  for (;;) {
    // next = (root + x / root) / 2
    mpz_fdiv_q(next.get_mpz_t(), x.get_mpz_t(), root.get_mpz_t());
    next += root;
    mpz_fdiv_q_2exp(next.get_mpz_t(), next.get_mpz_t(), 1);
    if (next >= root) break;
    swap(root, next);
  }

  // Floor-correctness check; loops never run more than a step in practice
  // but the return value is proven right regardless of the path here.
  Natural square = root * root;
  while (square > x) {
    --root;
    square = root * root;
  }
  while (true) {
    Natural above = (root + 1) * (root + 1);
    if (above > x) break;
    ++root;
    square = root * root;
  }
  return {root, square == x};
}

bool is_perfect_square(const Natural& x) { return isqrt(x).exact; }

}  // namespace prothx
