#include "prothx/bls.hpp"

#include "prothx/natural.hpp"
#include "prothx/ntkernel.hpp"
#include "prothx/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace prothx;
using prothx::testing::naive_mod_pow;

TEST_SUITE("bls") {

TEST_CASE("make_bls_instance: validation") {
  const BlsInstance ok = make_bls_instance(19, 2, 3, 2);
  CHECK(ok.N == 19);
  CHECK(ok.m == 2);
  CHECK(ok.p == 3);
  CHECK(ok.z == 2);
  CHECK(ok.p_verified);

  CHECK_THROWS_AS(make_bls_instance(19, 3, 3, 2), std::invalid_argument);  // 28 != 19
  CHECK_THROWS_AS(make_bls_instance(19, 2, 3, 0), std::invalid_argument);  // z < 1
  CHECK_THROWS_AS(make_bls_instance(19, 0, 3, 2), std::invalid_argument);  // m < 1
  CHECK_THROWS_AS(make_bls_instance(33, 8, 4, 1), std::invalid_argument);  // p = 4
  CHECK_THROWS_AS(make_bls_instance(19, 2, 9, 1), std::invalid_argument);  // p = 9
  CHECK_THROWS_AS(make_bls_instance(66, 13, 5, 1), std::invalid_argument); // N even
}

TEST_CASE("make_bls_instance: large p is trusted, not verified") {
  const Natural p("10000019");  // above the checking bound
  REQUIRE(oracle_is_prime(p)); // it really is prime; only the flag differs
  const BlsInstance inst = make_bls_instance(2 * p + 1, 2, p, 1);
  CHECK_FALSE(inst.p_verified);

  const BlsInstance small = make_bls_instance(2 * Natural(9999991) + 1, 2,
                                              Natural(9999991), 1);
  CHECK(small.p_verified);  // 9999991 is prime and under the bound
}

TEST_CASE("bls_power_test: 19 = 2 * 3^2 + 1 proven with base 2") {
  // Work the three conditions by hand before trusting the routine.
  CHECK(Natural(2 * 9 + 1) * (2 * 9 + 1) > 19);  // 361 > 19
  CHECK(naive_mod_pow(2, 18, 19) == 1);
  CHECK(naive_mod_pow(2, 6, 19) == 7);           // 2^(m*p) = 2^6 != 1

  const BlsInstance inst = make_bls_instance(19, 2, 3, 2);
  CHECK(bls_power_test(inst, 2) == BlsOutcome{BlsOutcome::Kind::Prime, {}});
}

TEST_CASE("bls_power_test: 37 = 4 * 3^2 + 1 proven with base 2") {
  CHECK(naive_mod_pow(2, 36, 37) == 1);
  CHECK(naive_mod_pow(2, 12, 37) == 26);
  const BlsInstance inst = make_bls_instance(37, 4, 3, 2);
  CHECK(bls_power_test(inst, 2) == BlsOutcome{BlsOutcome::Kind::Prime, {}});
}

TEST_CASE("bls_power_test: 25 = 8 * 3 + 1 fails per base as derived") {
  const BlsInstance inst = make_bls_instance(25, 8, 3, 1);

  // Base 7: 7^2 = -1 mod 25, so 7^24 = 1 (Fermat holds) but 7^8 = 1 too.
  CHECK(naive_mod_pow(7, 2, 25) == 24);
  CHECK(naive_mod_pow(7, 24, 25) == 1);
  CHECK(naive_mod_pow(7, 8, 25) == 1);
  CHECK(bls_power_test(inst, 7) ==
        BlsOutcome{BlsOutcome::Kind::Inconclusive, BlsCondition::OrderCondition});

  // Base 2: 2^24 = 16 mod 25, Fermat already fails.
  CHECK(naive_mod_pow(2, 24, 25) == 16);
  CHECK(bls_power_test(inst, 2) ==
        BlsOutcome{BlsOutcome::Kind::Inconclusive, BlsCondition::FermatCondition});
}

TEST_CASE("bls_power_test: size bound is checked first") {
  // 49 = 16 * 3 + 1: (2 * 3 + 1)^2 = 49 is not strictly above N.
  const BlsInstance inst = make_bls_instance(49, 16, 3, 1);
  CHECK(bls_power_test(inst, 2) ==
        BlsOutcome{BlsOutcome::Kind::Inconclusive, BlsCondition::SizeBound});
  // Even a base that would pass Fermat elsewhere reports the size failure.
  CHECK(bls_power_test(inst, 48) ==
        BlsOutcome{BlsOutcome::Kind::Inconclusive, BlsCondition::SizeBound});
}

TEST_CASE("bls_power_test: base range enforced") {
  const BlsInstance inst = make_bls_instance(19, 2, 3, 2);
  CHECK_THROWS_AS(bls_power_test(inst, 1), std::invalid_argument);
  CHECK_THROWS_AS(bls_power_test(inst, 19), std::invalid_argument);
  CHECK_THROWS_AS(bls_power_test(inst, 0), std::invalid_argument);
}

TEST_CASE("bls_power_test: 17 = 1 * 2^4 + 1, base 2 fails order, base 3 proves") {
  const BlsInstance inst = make_bls_instance(17, 1, 2, 4);
  // ord_17(2) = 8 divides the reduced exponent m * p^(z-1) = 8.
  CHECK(oracle_order(2, 17) == 8);
  CHECK(bls_power_test(inst, 2) ==
        BlsOutcome{BlsOutcome::Kind::Inconclusive, BlsCondition::OrderCondition});
  CHECK(naive_mod_pow(3, 8, 17) == 16);
  CHECK(bls_power_test(inst, 3) == BlsOutcome{BlsOutcome::Kind::Prime, {}});
}

TEST_CASE("bls_search: finds the first proving prime base") {
  const BlsInstance inst = make_bls_instance(17, 1, 2, 4);
  const BlsSearchResult r = bls_search(inst, 10);
  CHECK(r.outcome.kind == BlsOutcome::Kind::Prime);
  CHECK(r.base == Natural(3));
  CHECK(r.bases_tried == 2);  // 2 failed, 3 proved

  const BlsSearchResult first = bls_search(make_bls_instance(19, 2, 3, 2), 20);
  CHECK(first.outcome.kind == BlsOutcome::Kind::Prime);
  CHECK(first.base == Natural(2));
  CHECK(first.bases_tried == 1);
}

TEST_CASE("bls_search: reports the deepest failure across bases") {
  // For 25, base 2 fails Fermat but base 7 reaches the order condition;
  // no prime base below 20 proves anything (25 is composite).
  const BlsInstance inst = make_bls_instance(25, 8, 3, 1);
  const BlsSearchResult r = bls_search(inst, 20);
  CHECK(r.outcome.kind == BlsOutcome::Kind::Inconclusive);
  CHECK(r.outcome.failed == BlsCondition::OrderCondition);
  CHECK_FALSE(r.base.has_value());
  CHECK(r.bases_tried == 8);  // 2 3 5 7 11 13 17 19
}

TEST_CASE("bls_search: size failure returns immediately") {
  const BlsInstance inst = make_bls_instance(49, 16, 3, 1);
  const BlsSearchResult r = bls_search(inst, 20);
  CHECK(r.outcome == BlsOutcome{BlsOutcome::Kind::Inconclusive, BlsCondition::SizeBound});
  CHECK(r.bases_tried == 1);
}

TEST_CASE("bls: the loose size bound would pass composites; the tight one refuses") {
  // 15 = 7 * 2 + 1. Base 4 satisfies the Fermat and order conditions
  // (4^14 = 1 and 4^7 = 4 mod 15) and (2 * 2 + 1)^2 = 25 > 15, yet 15 = 3 * 5.
  // The factor forced by the argument is only >= 2^1 + 1 = 3 here, so the
  // honest size requirement is (2^z + 1)^2 > N, which 15 fails.
  CHECK(naive_mod_pow(4, 14, 15) == 1);
  CHECK(naive_mod_pow(4, 7, 15) == 4);
  const BlsInstance inst = make_bls_instance(15, 7, 2, 1);
  CHECK(bls_power_test(inst, 4) ==
        BlsOutcome{BlsOutcome::Kind::Inconclusive, BlsCondition::SizeBound});

  // 66 = 13 * 5 + 1 satisfies all three stated conditions at base 25
  // (ord_66(25) = 5), but an even N never reaches the test at all.
  CHECK(naive_mod_pow(25, 65, 66) == 1);
  CHECK(naive_mod_pow(25, 13, 66) == 49);
  CHECK_THROWS_AS(make_bls_instance(66, 13, 5, 1), std::invalid_argument);
}

TEST_CASE("bls: never claims prime for a composite, bases to 20, N to 20000") {
  for (unsigned long v = 9; v <= 20000; v += 2) {
    const Natural N(v);
    if (oracle_is_prime(N)) continue;
    const Factorization f = oracle_factor(N - 1);
    for (const PrimePower& pp : f.factors) {
      Natural pz(1);
      for (unsigned long z = 1; z <= pp.multiplicity; ++z) {
        pz *= pp.prime;
        const Natural bound = 2 * pz + 1;
        if (bound * bound <= N) continue;
        const BlsInstance inst = make_bls_instance(N, (N - 1) / pz, pp.prime, z);
        CAPTURE(v);
        CAPTURE(z);
        for (unsigned long a = 2; a <= 20 && a < v; ++a)
          REQUIRE(bls_power_test(inst, a).kind == BlsOutcome::Kind::Inconclusive);
        REQUIRE(bls_search(inst, 20).outcome.kind == BlsOutcome::Kind::Inconclusive);
      }
    }
  }
}

TEST_CASE("bls_search: proves every prime to 200000 that admits a usable form") {
  // Observed, not theorem-backed: whenever some maximal prime power of N - 1
  // clears the size bound, a proving base turns up quickly.
  unsigned long provable = 0;
  for (unsigned long v = 3; v <= 200000; v += 2) {
    const Natural N(v);
    if (!oracle_is_prime(N)) continue;
    const Factorization f = oracle_factor(N - 1);
    for (const PrimePower& pp : f.factors) {
      Natural pz(1);
      for (unsigned long z = 1; z <= pp.multiplicity; ++z) pz *= pp.prime;
      const Natural floor_factor = pp.prime == 2 ? Natural(pz + 1)
                                                 : Natural(2 * pz + 1);
      if (floor_factor * floor_factor <= N) continue;
      const BlsInstance inst =
          make_bls_instance(N, (N - 1) / pz, pp.prime, pp.multiplicity);
      const BlsSearchResult r = bls_search(inst, 50);
      CAPTURE(v);
      CAPTURE(to_decimal(pp.prime));
      REQUIRE(r.outcome.kind == BlsOutcome::Kind::Prime);
      ++provable;
    }
  }
  CHECK(provable > 14000);  // most primes have a big enough prime power
}

TEST_CASE("bls: proves primes the other test cannot touch") {
  // 163 = 2 * 3^4 + 1 has n = 1, far outside the power-of-two regime,
  // but sits well inside the power-of-three bound.
  REQUIRE(oracle_is_prime(163));
  const BlsInstance inst = make_bls_instance(163, 2, 3, 4);
  const BlsSearchResult r = bls_search(inst, 50);
  CHECK(r.outcome.kind == BlsOutcome::Kind::Prime);
}

}  // TEST_SUITE
