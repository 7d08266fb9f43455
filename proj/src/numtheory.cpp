#include "starclean/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "starclean/error.hpp"

namespace starclean::numtheory {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  if (n == 1) return 0;
  std::uint64_t result = 1;
  a %= n;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, a, n);
    a = mul_mod(a, a, n);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce(std::int64_t a, std::uint64_t n) {
  if (n == 0) throw InvalidInput("modulus must be positive");
  if (a >= 0) return static_cast<std::uint64_t>(a) % n;
  // -(a + 1) avoids overflow on INT64_MIN
  const std::uint64_t neg = static_cast<std::uint64_t>(-(a + 1)) % n;
  return n - 1 - neg;
}

std::uint64_t ipow(std::uint64_t a, unsigned e) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (a != 0 && result > UINT64_MAX / a) throw LimitExceeded("integer power overflows 64 bits");
    result *= a;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw InvalidInput("cannot factorize 0");
  Factorization f;
  f.value = n;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    unsigned mult = 0;
    while (n % d == 0) {
      n /= d;
      ++mult;
    }
    if (mult) f.factors.emplace_back(d, mult);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto f = factorize(q);
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors.front();
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n).factors) phi = phi / p * (p - 1);
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t prev = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < prev; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t mul_order(std::int64_t a, std::uint64_t n) {
  if (n < 2) throw InvalidInput("mul_order: modulus must be at least 2");
  const std::uint64_t r = reduce(a, n);
  if (std::gcd(r, n) != 1)
    throw InvalidInput("mul_order: " + std::to_string(a) + " is not a unit mod " + std::to_string(n));
  // The order divides phi(n); strip prime factors while the power stays 1.
  std::uint64_t t = euler_phi(n);
  for (const auto& [p, e] : factorize(t).factors) {
    for (unsigned i = 0; i < e && t % p == 0 && pow_mod(r, t / p, n) == 1; ++i) t /= p;
  }
  return t;
}

std::uint64_t ord_prime_power(std::int64_t a, std::uint64_t p, unsigned n) {
  if (p % 2 == 0 || !is_prime(p)) throw InvalidInput("ord_prime_power: p must be an odd prime");
  if (n == 0) throw InvalidInput("ord_prime_power: exponent must be positive");
  if (a == 1 || a == -1) throw InvalidInput("ord_prime_power: a must differ from 1 and -1");
  if (reduce(a, p) == 0) throw InvalidInput("ord_prime_power: p divides a");

  const std::uint64_t d = mul_order(a, p);
  const std::uint64_t pn = ipow(p, n);
  // h is only needed up to n: residue of a^d modulo p^n carries v_p(a^d - 1)
  // when that valuation is below n.
  const std::uint64_t r = pow_mod(reduce(a, pn), d, pn);
  const unsigned h = (r == 1) ? n : valuation((r + pn - 1) % pn, p);
  if (n <= h) return d;
  return ipow(p, n - h) * d;
}

std::optional<std::uint64_t> solve_power_congruence(std::int64_t q, std::int64_t v, std::uint64_t m) {
  if (m == 0) throw InvalidInput("solve_power_congruence: modulus must be positive");
  if (m == 1) return 1;
  const std::uint64_t base = reduce(q, m);
  if (std::gcd(base, m) != 1)
    throw InvalidInput("solve_power_congruence: gcd(" + std::to_string(q) + ", " + std::to_string(m) + ") != 1");
  const std::uint64_t target = reduce(v, m);
  const std::uint64_t order = mul_order(q, m);
  std::uint64_t x = 1;
  for (std::uint64_t t = 1; t <= order; ++t) {
    x = mul_mod(x, base, m);
    if (x == target) return t;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> square_roots_of_unity(std::uint64_t n) {
  if (n == 0) throw InvalidInput("square_roots_of_unity: modulus must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < n; ++v)
    if (mul_mod(v, v, n) == 1 % n) out.push_back(v);
  return out;
}

}  // namespace starclean::numtheory
