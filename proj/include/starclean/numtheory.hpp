#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Elementary number theory on 64-bit integers: orders, power congruences,
// small factorizations.
namespace starclean::numtheory {

struct Factorization {
  std::uint64_t value = 1;
  /// (prime, multiplicity), primes strictly increasing.
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t n);

/// Representative of a in [0, n). n must be positive.
std::uint64_t reduce(std::int64_t a, std::uint64_t n);

/// Checked a^e; throws LimitExceeded on 64-bit overflow.
std::uint64_t ipow(std::uint64_t a, unsigned e);

bool is_prime(std::uint64_t n);

/// Trial-division factorization, n >= 1.
Factorization factorize(std::uint64_t n);

/// (p, k) with q = p^k, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Largest j with p^j dividing n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// Least t >= 1 with a^t = 1 (mod n). Requires n >= 2 and gcd(a, n) = 1.
std::uint64_t mul_order(std::int64_t a, std::uint64_t n);

/// ord_{p^n}(a) through the lifting formula: d = ord_p(a), p^h || a^d - 1,
/// result d when n <= h and p^(n-h) d otherwise.
std::uint64_t ord_prime_power(std::int64_t a, std::uint64_t p, unsigned n);

/// Least t >= 1 with q^t = v (mod m), searching t up to ord_m(q). m = 1
/// gives t = 1. Negative v is reduced mod m first.
std::optional<std::uint64_t> solve_power_congruence(std::int64_t q, std::int64_t v, std::uint64_t m);

/// All v in [0, n) with v^2 = 1 (mod n), ascending. n = 1 gives {0}.
std::vector<std::uint64_t> square_roots_of_unity(std::uint64_t n);

}  // namespace starclean::numtheory
