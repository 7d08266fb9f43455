#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "starclean/algebra.hpp"
#include "starclean/numtheory.hpp"

namespace support {

using starclean::algebra::Algebra;
using starclean::algebra::AlgebraElem;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedc0de);
  return gen;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

inline AlgebraElem random_elem(const Algebra& alg, double density = 1.0) {
  AlgebraElem a = alg.zero();
  std::bernoulli_distribution keep(density);
  for (auto& c : a.coeffs)
    if (keep(rng())) c = static_cast<std::uint32_t>(uniform(0, alg.field().size() - 1));
  return a;
}

/// Total number of elements q^|G|, or 0 when that exceeds the limit.
inline std::uint64_t algebra_size(std::uint64_t q, std::uint64_t order, std::uint64_t limit) {
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    if (n > limit / q) return 0;
    n *= q;
  }
  return n;
}

/// Visits every element of the algebra (coefficients as base-q digits).
inline void for_each_element(const Algebra& alg, const std::function<void(const AlgebraElem&)>& f) {
  const std::uint64_t q = alg.field().size();
  AlgebraElem a = alg.zero();
  while (true) {
    f(a);
    std::size_t i = 0;
    while (i < a.coeffs.size() && ++a.coeffs[i] == q) a.coeffs[i++] = 0;
    if (i == a.coeffs.size()) return;
  }
}

/// Brute-force idempotent set {a : a^2 = a}.
inline std::vector<AlgebraElem> brute_idempotents(const Algebra& alg) {
  std::vector<AlgebraElem> out;
  for_each_element(alg, [&](const AlgebraElem& a) {
    if (alg.mul(a, a) == a) out.push_back(a);
  });
  return out;
}

/// Least t >= 1 with a^t = 1 mod n by repeated multiplication.
inline std::uint64_t naive_order(std::uint64_t a, std::uint64_t n) {
  std::uint64_t x = a % n, t = 1;
  while (x != 1 % n) {
    x = x * (a % n) % n;
    ++t;
    if (t > n) return 0;
  }
  return t;
}

}  // namespace support
