#include "prothx/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "u64_arith.hpp"

namespace prothx {
namespace {

using std::uint64_t;

uint64_t require_desk_scale(const Natural& n, const char* who) {
  if (!fits_u64(n)) {
    throw std::invalid_argument(std::string(who) + ": input exceeds the supported desk scale");
  }
  return to_u64(n);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, unsigned>> factor_u64(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  auto strip = [&](uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (uint64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.emplace_back(n, 1);  // remainder has no divisor <= its root
  return out;
}

// Carmichael function from a factorization of n.
uint64_t carmichael_u64(const std::vector<std::pair<uint64_t, unsigned>>& factors) {
  uint64_t lambda = 1;
  for (const auto& [p, e] : factors) {
    uint64_t part;
    if (p == 2) {
      part = e == 1 ? 1 : (e == 2 ? 2 : uint64_t(1) << (e - 2));
    } else {
      part = p - 1;
      for (unsigned i = 1; i < e; ++i) part *= p;
    }
    lambda = std::lcm(lambda, part);
  }
  return lambda;
}

std::vector<uint64_t> sorted_divisors_u64(uint64_t n) {
  std::vector<uint64_t> divisors{1};
  for (const auto& [p, e] : factor_u64(n)) {
    const std::size_t current = divisors.size();
    uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < current; ++j) divisors.push_back(divisors[j] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

constexpr uint64_t kSteppingLimit = 100000;

uint64_t order_by_stepping(uint64_t a, uint64_t n) {
  uint64_t value = a % n;
  uint64_t e = 1;
  while (value != 1) {
    value = value * a % n;  // n <= 10^5 keeps the product inside 64 bits
    ++e;
  }
  return e;
}

uint64_t order_by_divisors(uint64_t a, uint64_t n) {
  const uint64_t lambda = carmichael_u64(factor_u64(n));
  for (uint64_t d : sorted_divisors_u64(lambda)) {
    if (detail::powmod_u64(a, d, n) == 1) return d;
  }
  throw std::logic_error("oracle_order: no exponent found below the Carmichael bound");
}

}  // namespace

Natural Factorization::product() const {
  Natural result = 1;
  for (const auto& [prime, multiplicity] : factors) {
    for (unsigned i = 0; i < multiplicity; ++i) result *= prime;
  }
  return result;
}

bool oracle_is_prime(const Natural& n) {
  if (sgn(n) < 0) return false;
  return is_prime_u64(require_desk_scale(n, "oracle_is_prime"));
}

Factorization oracle_factor(const Natural& n) {
  if (n < 2) throw std::invalid_argument("oracle_factor: n must be >= 2");
  Factorization result;
  for (const auto& [p, e] : factor_u64(require_desk_scale(n, "oracle_factor"))) {
    result.factors.push_back({Natural(static_cast<unsigned long>(p)), e});
  }
  return result;
}

Natural oracle_order(const Natural& a, const Natural& n) {
  if (n < 2) throw std::invalid_argument("oracle_order: n must be >= 2");
  if (sgn(a) < 0) throw std::invalid_argument("oracle_order: a must be nonnegative");
  Natural g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw std::invalid_argument("oracle_order: a and n must be coprime");

  const uint64_t n64 = require_desk_scale(n, "oracle_order");
  Natural reduced;
  mpz_mod(reduced.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  const uint64_t a64 = to_u64(reduced);

  const uint64_t e =
      n64 <= kSteppingLimit ? order_by_stepping(a64, n64) : order_by_divisors(a64, n64);
  return Natural(static_cast<unsigned long>(e));
}

}  // namespace prothx
