#include "prothx/bls.hpp"

#include "prothx/ntkernel.hpp"
#include "prothx/oracle.hpp"

#include <stdexcept>

namespace prothx {

namespace {

const Natural kPrimalityCheckBound = Natural(10000000);  // 10^7

Natural pow_natural(const Natural& base, unsigned long exp) {
  Natural acc(1);
  for (unsigned long i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace

BlsInstance make_bls_instance(const Natural& N, const Natural& m, const Natural& p,
                              unsigned long z) {
  if (m < 1) throw std::invalid_argument("bls: m must be >= 1");
  if (p < 2) throw std::invalid_argument("bls: p must be >= 2");
  if (z < 1) throw std::invalid_argument("bls: z must be >= 1");
  if (N != m * pow_natural(p, z) + 1)
    throw std::invalid_argument("bls: N != m * p^z + 1");
  // Even N breaks the cofactor step of the proof: 66 = 13 * 5 + 1 satisfies
  // all three conditions at base 25 yet is composite. Every prime factor and
  // cofactor must be odd for the size bound to pin the cofactor to 1.
  if (is_even(N)) throw std::invalid_argument("bls: N must be odd");

  bool verified = false;
  if (p <= kPrimalityCheckBound) {
    if (!oracle_is_prime(p)) throw std::invalid_argument("bls: p is composite");
    verified = true;
  }
  return BlsInstance{N, m, p, z, verified};
}

BlsOutcome bls_power_test(const BlsInstance& inst, const Natural& base) {
  if (base < 2 || base >= inst.N)
    throw std::invalid_argument("bls: base must satisfy 2 <= base < N");

  // The proof forces some prime factor q = c * p^z + 1 and then needs the
  // cofactor N / q, also = 1 mod p^z and odd, to be 1. Both are at least the
  // smallest odd value > 1 in that residue class: 2 * p^z + 1 for odd p, but
  // only p^z + 1 when p = 2 (15 = 7 * 2 + 1 passes the looser bound at base 4
  // yet is 3 * 5). The square of that floor is the honest size requirement.
  const Natural pz = pow_natural(inst.p, inst.z);
  const Natural bound = inst.p == 2 ? Natural(pz + 1) : Natural(2 * pz + 1);
  if (bound * bound <= inst.N)
    return BlsOutcome{BlsOutcome::Kind::Inconclusive, BlsCondition::SizeBound};

  if (mod_pow(base, inst.N - 1, inst.N) != 1)
    return BlsOutcome{BlsOutcome::Kind::Inconclusive, BlsCondition::FermatCondition};

  // z = 1 drops the exponent to plain m.
  const Natural sub_exp = inst.m * pow_natural(inst.p, inst.z - 1);
  if (mod_pow(base, sub_exp, inst.N) == 1)
    return BlsOutcome{BlsOutcome::Kind::Inconclusive, BlsCondition::OrderCondition};

  return BlsOutcome{BlsOutcome::Kind::Prime, std::nullopt};
}

BlsSearchResult bls_search(const BlsInstance& inst, unsigned long base_limit) {
  // Rank failures so the search reports the deepest one: passing Fermat but
  // failing the order check says more than failing Fermat outright.
  auto rank = [](BlsCondition c) {
    switch (c) {
      case BlsCondition::SizeBound: return 0;
      case BlsCondition::FermatCondition: return 1;
      case BlsCondition::OrderCondition: return 2;
    }
    return 0;
  };

  BlsSearchResult result{BlsOutcome{BlsOutcome::Kind::Inconclusive, std::nullopt},
                         std::nullopt, 0};
  int best_rank = -1;

  for (Natural a(2); a <= base_limit; ++a) {
    if (!oracle_is_prime(a)) continue;
    if (a >= inst.N) break;
    ++result.bases_tried;

    const BlsOutcome outcome = bls_power_test(inst, a);
    if (outcome.kind == BlsOutcome::Kind::Prime) {
      result.outcome = outcome;
      result.base = a;
      return result;
    }
    // The size bound does not depend on the base; no point trying more.
    if (*outcome.failed == BlsCondition::SizeBound) {
      result.outcome = outcome;
      return result;
    }
    if (rank(*outcome.failed) > best_rank) {
      best_rank = rank(*outcome.failed);
      result.outcome = outcome;
    }
  }
  return result;
}

}  // namespace prothx
