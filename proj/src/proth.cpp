#include "prothx/proth.hpp"

#include <stdexcept>
#include <utility>

namespace prothx {
namespace {

// Internal consistency failures are bugs, never data-dependent outcomes.
void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("proth internal check failed: ") + what);
}

constexpr unsigned kSmallPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::optional<Natural> small_prime_factor(const Natural& N) {
  for (unsigned p : kSmallPrimes) {
    if (mpz_divisible_ui_p(N.get_mpz_t(), p) != 0 && N != p) return Natural(p);
  }
  return std::nullopt;
}

}  // namespace

Verdict Verdict::prime(Natural witness_base) {
  return {VerdictKind::Prime, std::move(witness_base), std::nullopt, std::nullopt};
}

Verdict Verdict::composite(CompositeEvidence ev, std::optional<Natural> witness_base) {
  return {VerdictKind::Composite, std::move(witness_base), std::move(ev), std::nullopt};
}

Verdict Verdict::inapplicable(InapplicableReason r) {
  return {VerdictKind::Inapplicable, std::nullopt, std::nullopt, r};
}

std::optional<ProthForm> decompose(const Natural& N) {
  if (N < 3 || is_even(N)) return std::nullopt;
  const Natural below = N - 1;  // even and >= 2
  const unsigned long n = trailing_zero_bits(below);
  Natural k;
  mpz_fdiv_q_2exp(k.get_mpz_t(), below.get_mpz_t(), n);
  return ProthForm{N, std::move(k), n};
}

std::optional<ProthForm> proth_form_from_pair(const Natural& k, unsigned long n) {
  if (n < 1 || sgn(k) <= 0 || is_even(k)) return std::nullopt;
  Natural N;
  mpz_mul_2exp(N.get_mpz_t(), k.get_mpz_t(), n);
  N += 1;
  return ProthForm{std::move(N), k, n};
}

RegimeCheck regime(const ProthForm& form) {
  return {
      pow2(3 * form.n) > form.N,
      pow2(2 * form.n) > form.N,
      pow2(form.n) > form.k,
  };
}

std::optional<SemiprimeSolution> semiprime_resolve(const ProthForm& form) {
  if (!regime(form).cube_ok) {
    throw std::invalid_argument("semiprime_resolve: requires 2^(3n) > N");
  }

  SemiprimeSolution sol;
  sol.s = low_bits(form.k, form.n);
  mpz_fdiv_q_2exp(sol.prod.get_mpz_t(), form.k.get_mpz_t(), form.n);

  const Natural disc = sol.s * sol.s - 4 * sol.prod;
  if (sgn(disc) < 0) return std::nullopt;
  const auto [root, exact] = isqrt(disc);
  if (!exact) return std::nullopt;

  // s and the root always share parity when disc is a square (disc = s^2
  // mod 4), so integrality of u can only be violated by a bug.
  internal_check(is_even(sol.s - root), "s and sqrt(disc) have equal parity");

  sol.u = (sol.s - root) / 2;
  if (sol.u < 1) return std::nullopt;  // u = 0 encodes the trivial splitting 1 * N
  sol.v = (sol.s + root) / 2;

  mpz_mul_2exp(sol.p.get_mpz_t(), sol.u.get_mpz_t(), form.n);
  sol.p += 1;
  mpz_mul_2exp(sol.q.get_mpz_t(), sol.v.get_mpz_t(), form.n);
  sol.q += 1;
  internal_check(sol.p * sol.q == form.N, "recovered factors multiply back to N");
  return sol;
}

WitnessSearch find_witness(const Natural& N, unsigned long cap) {
  if (N < 3 || is_even(N)) throw std::invalid_argument("find_witness: N must be odd and >= 3");
  if (is_perfect_square(N)) {
    throw std::invalid_argument("find_witness: N must not be a perfect square");
  }

  Natural g;
  for (unsigned long a = 2; a <= cap; ++a) {
    const Natural base(a);
    switch (jacobi(base, N)) {
      case Sign::minus_one:
        return {WitnessSearch::Kind::Found, base, Natural()};
      case Sign::zero:
        mpz_gcd(g.get_mpz_t(), base.get_mpz_t(), N.get_mpz_t());
        if (g > 1 && g < N) return {WitnessSearch::Kind::SharedFactor, base, g};
        break;  // a multiple of N itself proves nothing
      case Sign::plus_one:
        break;
    }
  }
  return {WitnessSearch::Kind::Exhausted, Natural(), Natural()};
}

EulerResidue euler_residue(const Natural& N, const Natural& a) {
  if (N < 3 || is_even(N)) throw std::invalid_argument("euler_residue: N must be odd and >= 3");
  if (a < 2 || a >= N) throw std::invalid_argument("euler_residue: requires 2 <= a < N");

  Natural residue = mod_pow(a, (N - 1) / 2, N);
  EulerClass cls = EulerClass::Other;
  if (residue == 1) {
    cls = EulerClass::PlusOne;
  } else if (residue == N - 1) {
    cls = EulerClass::MinusOne;
  }
  return {cls, std::move(residue)};
}

namespace {

// Shared tail of both tests once a witness base with symbol -1 is in hand.
Verdict conclude_from_base(const ProthForm& form, const RegimeCheck& rc, const Natural& base,
                           bool allow_semiprime_step) {
  const EulerResidue er = euler_residue(form.N, base);
  if (er.cls != EulerClass::MinusOne) {
    return Verdict::composite(EulerWitness{base, er.residue}, base);
  }
  if (!allow_semiprime_step || rc.square_ok) {
    // Above the square-root threshold a nontrivial splitting is too large
    // to exist, so the Euler condition alone settles it.
    return Verdict::prime(base);
  }
  if (auto sol = semiprime_resolve(form)) {
    return Verdict::composite(FactorPair{sol->p, sol->q}, base);
  }
  return Verdict::prime(base);
}

Verdict run_pipeline(const Natural& N, const TestOptions& options, bool classic,
                     const Natural* forced_base) {
  const auto form = decompose(N);
  if (!form) return Verdict::inapplicable(InapplicableReason::NotProthForm);

  const RegimeCheck rc = regime(*form);
  if (classic) {
    if (!rc.classic_ok) return Verdict::inapplicable(InapplicableReason::OutsideClassicRegime);
  } else {
    if (!rc.cube_ok) return Verdict::inapplicable(InapplicableReason::OutsideCubeRegime);
  }

  // Squares first: no base can have symbol -1 against one, so the witness
  // scan would only ever exhaust itself.
  if (const auto [root, exact] = isqrt(N); exact) {
    return Verdict::composite(PerfectSquare{root});
  }

  if (options.small_prime_fast_path) {
    if (auto p = small_prime_factor(N)) return Verdict::composite(SharedFactor{*p});
  }

  Natural base;
  if (forced_base != nullptr) {
    if (jacobi(*forced_base, N) != Sign::minus_one) {
      throw std::invalid_argument("forced base must have Jacobi symbol -1");
    }
    base = *forced_base;
  } else {
    const WitnessSearch ws = find_witness(N, options.witness_cap);
    switch (ws.kind) {
      case WitnessSearch::Kind::SharedFactor:
        return Verdict::composite(SharedFactor{ws.factor});
      case WitnessSearch::Kind::Exhausted:
        return Verdict::inapplicable(InapplicableReason::WitnessExhausted);
      case WitnessSearch::Kind::Found:
        base = ws.base;
        break;
    }
  }

  return conclude_from_base(*form, rc, base, /*allow_semiprime_step=*/!classic);
}

}  // namespace

Verdict extended_proth_test(const Natural& N, const TestOptions& options) {
  return run_pipeline(N, options, /*classic=*/false, nullptr);
}

Verdict extended_proth_test_with_base(const Natural& N, const Natural& base,
                                      const TestOptions& options) {
  return run_pipeline(N, options, /*classic=*/false, &base);
}

Verdict classic_proth_test(const Natural& N, const TestOptions& options) {
  return run_pipeline(N, options, /*classic=*/true, nullptr);
}

}  // namespace prothx
