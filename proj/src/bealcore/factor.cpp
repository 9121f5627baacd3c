#include "bealcore/factor.hpp"

namespace bealcore {

namespace {

// n >= 2.
Natural smallest_prime_factor(const Natural& n) {
  if (mpz_even_p(n.get_mpz_t())) return Natural(2);
  Natural limit;
  mpz_sqrt(limit.get_mpz_t(), n.get_mpz_t());
  for (unsigned long d = 3; mpz_cmp_ui(limit.get_mpz_t(), d) >= 0; d += 2) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return Natural(d);
  }
  return n;  // no divisor up to sqrt(n): n is prime
}

}  // namespace

std::vector<Natural> factorize(const Natural& n) {
  if (n == 0) throw std::invalid_argument("factorization of zero is undefined");
  if (n < 0) throw std::invalid_argument("factorization needs a natural number");
  std::vector<Natural> factors;
  Natural m = n;
  while (m > 1 && mpz_even_p(m.get_mpz_t())) {
    factors.emplace_back(2);
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), 2);
  }
  Natural limit;
  mpz_sqrt(limit.get_mpz_t(), m.get_mpz_t());
  unsigned long d = 3;
  while (m > 1 && mpz_cmp_ui(limit.get_mpz_t(), d) >= 0) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      factors.emplace_back(d);
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      mpz_sqrt(limit.get_mpz_t(), m.get_mpz_t());
    } else {
      d += 2;
    }
  }
  if (m > 1) factors.push_back(m);
  return factors;
}

bool is_prime(const Natural& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::optional<Natural> common_prime_factor(const IntValue& a, const IntValue& b,
                                           const IntValue& c) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) {
    return std::nullopt;  // every prime qualifies; the report carries the flag
  }
  Natural g = 0;  // gcd(0, m) = m, so zeros drop out
  for (const IntValue* v : {&a, &b, &c}) {
    if (!v->is_zero()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->magnitude.get_mpz_t());
    }
  }
  if (g == 1) return std::nullopt;
  return smallest_prime_factor(g);
}

}  // namespace bealcore
