#include "prothx/ntkernel.hpp"

#include "prothx/natural.hpp"
#include "prothx/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace prothx;
using prothx::testing::naive_mod_pow;
using prothx::testing::random_natural;

namespace {

// GMP's own routines serve as independent references throughout this file;
// the library under test never calls them.
Natural gmp_powm(const Natural& b, const Natural& e, const Natural& m) {
  Natural r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

int gmp_jacobi(const Natural& a, const Natural& n) {
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

Natural gmp_sqrt(const Natural& x) {
  Natural r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

}  // namespace

TEST_SUITE("ntkernel") {

TEST_CASE("mod_pow: anchored residues mod 1649") {
  const Natural N(1649);
  // Reference values first, from the definition alone.
  const Natural r3 = naive_mod_pow(3, 824, N);
  CHECK(r3 == 1614);
  CHECK(r3 % 17 == 16);  // 1649 = 17 * 97; cross-check both prime parts
  CHECK(r3 % 97 == 62);
  const Natural r27 = naive_mod_pow(27, 824, N);
  CHECK(r27 == 1648);

  CHECK(mod_pow(3, 824, N) == r3);
  CHECK(mod_pow(27, 824, N) == r27);
}

TEST_CASE("mod_pow: identities and edges") {
  CHECK(mod_pow(0, 0, 7) == 1);   // empty product
  CHECK(mod_pow(0, 5, 7) == 0);
  CHECK(mod_pow(5, 0, 2) == 1);   // 1 mod 2
  CHECK(mod_pow(4, 1, 3) == 1);   // base reduced first
  CHECK(mod_pow(10, 1, 7) == 3);
  CHECK(mod_pow(2, 10, 1025) == 1024);

  CHECK_THROWS_AS(mod_pow(2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(mod_pow(2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(mod_pow(Natural(-2), 3, 7), std::invalid_argument);
  CHECK_THROWS_AS(mod_pow(2, Natural(-1), 7), std::invalid_argument);
}

TEST_CASE("mod_pow: exhaustive small cube against the power ladder") {
  for (unsigned long m = 2; m <= 100; ++m) {
    for (unsigned long a = 0; a <= 100; ++a) {
      Natural acc = Natural(1) % m;  // running a^e mod m
      for (unsigned long e = 0; e <= 100; ++e) {
        CAPTURE(m);
        CAPTURE(a);
        CAPTURE(e);
        REQUIRE(mod_pow(a, e, m) == acc);
        acc = acc * (a % m) % m;
      }
    }
  }
}

TEST_CASE("mod_pow: random large inputs against GMP") {
  std::mt19937_64 rng(0x6d6f64706f77);
  for (int i = 0; i < 200; ++i) {
    const Natural m = random_natural(rng, 256) | 1;  // odd modulus
    const Natural b = random_natural(rng, 300);
    const Natural e = random_natural(rng, 256);
    CHECK(mod_pow(b, e, m) == gmp_powm(b, e, m));
  }
  // Even moduli too; nothing in the routine assumes odd.
  for (int i = 0; i < 50; ++i) {
    const Natural m = random_natural(rng, 200);
    if (m < 2) continue;
    const Natural b = random_natural(rng, 180);
    const Natural e = random_natural(rng, 64);
    CHECK(mod_pow(b, e, m) == gmp_powm(b, e, m));
  }
}

TEST_CASE("mod_pow: product-of-exponents identity at width") {
  std::mt19937_64 rng(0x657870);
  for (int i = 0; i < 50; ++i) {
    const Natural m = random_natural(rng, 192) | 1;
    const Natural a = random_natural(rng, 128);
    const Natural x = random_natural(rng, 96);
    const Natural y = random_natural(rng, 96);
    CHECK(mod_pow(a, x + y, m) == mod_pow(a, x, m) * mod_pow(a, y, m) % m);
  }
}

TEST_CASE("jacobi: small anchored values") {
  CHECK(jacobi(2, 3) == Sign::minus_one);
  CHECK(jacobi(2, 7) == Sign::plus_one);
  CHECK(jacobi(3, 7) == Sign::minus_one);
  CHECK(jacobi(2, 15) == Sign::plus_one);   // composite bottom: 15 = 7 mod 8
  CHECK(jacobi(3, 15) == Sign::zero);
  CHECK(jacobi(5, 9) == Sign::plus_one);    // square bottom: never -1
  CHECK(jacobi(3, 9) == Sign::zero);
  CHECK(jacobi(0, 1) == Sign::plus_one);
  CHECK(jacobi(0, 5) == Sign::zero);
  CHECK(jacobi(1, 999) == Sign::plus_one);

  CHECK_THROWS_AS(jacobi(3, 8), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(3, 0), std::invalid_argument);
}

TEST_CASE("jacobi: witness base for 1649 via its prime parts") {
  // (3|1649) = (3|17)(3|97), and over prime bottoms the symbol is the
  // Euler residue. Compute both residues from the definition first.
  const Natural e17 = naive_mod_pow(3, 8, 17);
  const Natural e97 = naive_mod_pow(3, 48, 97);
  CHECK(e17 == 16);  // -1: nonresidue mod 17
  CHECK(e97 == 1);   // +1: residue mod 97
  CHECK(jacobi(3, 17) == Sign::minus_one);
  CHECK(jacobi(3, 97) == Sign::plus_one);
  CHECK(jacobi(3, 1649) == Sign::minus_one);
}

TEST_CASE("jacobi: equals the Euler residue over odd prime bottoms") {
  for (unsigned long p = 3; p <= 499; p += 2) {
    if (!oracle_is_prime(p)) continue;
    for (unsigned long a = 0; a <= 2 * p; ++a) {
      const Natural r = mod_pow(a, (p - 1) / 2, p);
      Sign expected;
      if (r == 0)
        expected = Sign::zero;
      else if (r == 1)
        expected = Sign::plus_one;
      else if (r == p - 1)
        expected = Sign::minus_one;
      else
        FAIL("Euler residue not in {0, 1, -1} over a prime bottom");
      CAPTURE(p);
      CAPTURE(a);
      REQUIRE(jacobi(a, p) == expected);
    }
  }
}

TEST_CASE("jacobi: multiplicative in both arguments, periodic on top") {
  for (unsigned long m = 1; m <= 61; m += 2) {
    for (unsigned long n = 1; n <= 61; n += 2) {
      for (unsigned long a = 0; a <= 61; ++a) {
        REQUIRE(to_int(jacobi(a, Natural(m) * n)) ==
                to_int(jacobi(a, m)) * to_int(jacobi(a, n)));
      }
    }
  }
  for (unsigned long n = 1; n <= 99; n += 2) {
    for (unsigned long a = 0; a <= 49; ++a) {
      for (unsigned long b = 0; b <= 49; ++b) {
        REQUIRE(to_int(jacobi(Natural(a) * b, n)) ==
                to_int(jacobi(a, n)) * to_int(jacobi(b, n)));
      }
      REQUIRE(jacobi(a + n, n) == jacobi(a, n));
    }
  }
}

TEST_CASE("jacobi: random large inputs against GMP") {
  std::mt19937_64 rng(0x6a61636f6269);
  for (int i = 0; i < 2000; ++i) {
    const Natural n = random_natural(rng, 192) | 1;
    const Natural a = random_natural(rng, 224);
    CHECK(to_int(jacobi(a, n)) == gmp_jacobi(a, n));
  }
}

TEST_CASE("isqrt: exhaustive floor property up to 100000") {
  for (unsigned long x = 0; x <= 100000; ++x) {
    const IsqrtResult r = isqrt(x);
    REQUIRE(r.root * r.root <= x);
    REQUIRE((r.root + 1) * (r.root + 1) > x);
    REQUIRE(r.exact == (r.root * r.root == x));
  }
}

TEST_CASE("isqrt: exact detection around large squares") {
  const Natural y = Natural("1" + std::string(50, '0')) + 12345;  // 10^50 + 12345
  const Natural y2 = y * y;
  CHECK(isqrt(y2).root == y);
  CHECK(isqrt(y2).exact);
  CHECK(isqrt(y2 + 1).root == y);
  CHECK_FALSE(isqrt(y2 + 1).exact);
  CHECK(isqrt(y2 - 1).root == y - 1);
  CHECK_FALSE(isqrt(y2 - 1).exact);
}

TEST_CASE("isqrt: random large inputs against GMP") {
  std::mt19937_64 rng(0x69737172);
  for (int i = 0; i < 300; ++i) {
    const Natural x = random_natural(rng, 512);
    const IsqrtResult r = isqrt(x);
    CHECK(r.root == gmp_sqrt(x));
    CHECK(r.exact == (r.root * r.root == x));
  }
  for (int i = 0; i < 100; ++i) {
    const Natural y = random_natural(rng, 256);
    CHECK(isqrt(y * y) == IsqrtResult{y, true});
  }
}

TEST_CASE("is_perfect_square: agrees with isqrt exactness") {
  for (unsigned long x = 0; x <= 20000; ++x)
    REQUIRE(is_perfect_square(x) == isqrt(x).exact);
  const Natural big("123456789123456789123456789");
  CHECK(is_perfect_square(big * big));
  CHECK_FALSE(is_perfect_square(big * big + 2));
}

TEST_CASE("sign conversion") {
  CHECK(to_int(Sign::minus_one) == -1);
  CHECK(to_int(Sign::zero) == 0);
  CHECK(to_int(Sign::plus_one) == 1);
}

}  // TEST_SUITE
