#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "starclean/codes.hpp"
#include "starclean/decision.hpp"
#include "starclean/error.hpp"
#include "support.hpp"

using namespace starclean;
using namespace starclean::codes;
using algebra::parse;

namespace {

Algebra make(std::uint64_t q, const char* g) { return Algebra(algebra::AbelianGroup::parse(g), gf::SmallField::make(q)); }

std::size_t class_at(const idem::PrimitiveSystem& sys, std::uint64_t rep) {
  for (std::size_t i = 0; i < sys.primitives.size(); ++i)
    if (sys.primitives[i].cls.representative == rep) return i;
  FAIL("no class with that representative");
  return 0;
}

AlgebraElem row_elem(const Algebra& alg, const linalg::Matrix& m, std::size_t r) {
  AlgebraElem a = alg.zero();
  for (std::size_t c = 0; c < m.cols(); ++c) a.coeffs[c] = m.at(r, c);
  return a;
}

// Every codeword as the span of the basis rows.
std::vector<AlgebraElem> codewords(const Algebra& alg, const AbelianCode& c) {
  const auto& f = alg.field();
  std::vector<AlgebraElem> out;
  std::vector<std::uint32_t> digits(c.dimension(), 0);
  while (true) {
    AlgebraElem w = alg.zero();
    for (std::size_t r = 0; r < c.dimension(); ++r)
      if (digits[r]) w = alg.add(w, alg.scale(digits[r], row_elem(alg, c.basis, r)));
    out.push_back(w);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == f.size()) digits[i++] = 0;
    if (i == digits.size()) return out;
  }
}

bool coprime(std::uint64_t q, std::uint64_t n) { return std::gcd(n, q) == 1; }

}  // namespace

TEST_CASE("code of a class of order 3 over GF(2)") {
  const auto alg = make(2, "C3xC3");
  const auto sys = idem::primitive_idempotents(alg);
  const auto k = class_at(sys, 1);
  const auto& e = sys.primitives[k].element;
  const auto c = code_from_class(alg, sys, k);
  CHECK(c.dimension() == 2);
  CHECK(c.length() == 9);
  const auto y = alg.group().generator(1);
  std::set<std::vector<std::uint32_t>> want{alg.zero().coeffs, e.coeffs, alg.shift(e, y).coeffs,
                                            alg.shift(e, alg.group().mul(y, y)).coeffs};
  std::set<std::vector<std::uint32_t>> got;
  for (const auto& w : codewords(alg, c)) got.insert(w.coeffs);
  CHECK(got == want);
  for (std::uint64_t i = 0; i < 3; ++i)
    for (std::uint64_t j = 0; j < 3; ++j)
      if (i != j)
        CHECK(inner_product(alg, alg.shift(e, alg.group().power(y, i)), alg.shift(e, alg.group().power(y, j))) == 1);
  const auto cls = classify_code(alg, sys, k);
  CHECK(cls.kind == CodeKind::LCD);
  CHECK(cls.order == 3);
  CHECK(cls.witness_t == std::optional<std::uint64_t>{1});
  CHECK(cls.hull_dimension == 0);

  const auto d = dual_code(alg, c);
  CHECK(d.dimension() == 7);
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < sys.primitives.size(); ++i)
    if (i != k) others.push_back(i);
  CHECK(others.size() == 4);
  CHECK(d.basis == code_from_classes(alg, sys, others).basis);
  CHECK(inverse_class(sys, k) == k);
}

TEST_CASE("code of a class of order 7 over GF(2)") {
  const auto alg = make(2, "C7xC7");
  const auto sys = idem::primitive_idempotents(alg);
  const auto k = class_at(sys, 1);
  const auto& e = sys.primitives[k].element;
  const auto c = code_from_class(alg, sys, k);
  CHECK(c.dimension() == 3);
  const auto words = codewords(alg, c);
  CHECK(words.size() == 8);
  const auto y = alg.group().generator(1);
  std::set<std::vector<std::uint32_t>> shifts{alg.zero().coeffs};
  for (std::uint64_t i = 0; i < 7; ++i) shifts.insert(alg.shift(e, alg.group().power(y, i)).coeffs);
  std::set<std::vector<std::uint32_t>> got;
  for (const auto& w : words) got.insert(w.coeffs);
  CHECK(got == shifts);
  for (std::uint64_t i = 0; i < 7; ++i)
    for (std::uint64_t j = i + 1; j < 7; ++j)
      CHECK(inner_product(alg, alg.shift(e, alg.group().power(y, i)), alg.shift(e, alg.group().power(y, j))) == 0);
  const auto cls = classify_code(alg, sys, k);
  CHECK(cls.kind == CodeKind::SelfOrthogonal);
  CHECK_FALSE(cls.witness_t.has_value());
  CHECK(cls.hull_dimension == 3);
  CHECK(inverse_class(sys, k) != k);
}

TEST_CASE("trivial character code") {
  for (std::uint64_t q : {2u, 3u, 5u}) {
    const auto alg = make(q, "C7");
    const auto sys = idem::primitive_idempotents(alg);
    const auto c = code_from_class(alg, sys, 0);
    REQUIRE(c.dimension() == 1);
    for (std::size_t i = 0; i < 7; ++i) CHECK(c.basis.at(0, i) == 1);
    CHECK(classify_code(alg, sys, 0).kind == CodeKind::LCD);
    CHECK(min_distance(alg, c) == std::optional<std::uint64_t>{7});
  }
  CHECK_THROWS_AS(code_from_class(make(2, "C6"), idem::primitive_idempotents(make(2, "C6")), 0), InvalidInput);
}

TEST_CASE("inner product and duals") {
  const auto alg = make(3, "C4");
  const auto a = parse(alg, "1 + 2*x1"), b = parse(alg, "1 + x1 + x1^3");
  CHECK(inner_product(alg, a, alg.zero()) == 0);
  CHECK(inner_product(alg, a, b) == 0);
  CHECK(inner_product(alg, b, b) == 0);
  CHECK(inner_product(alg, a, a) == 2);
  const auto whole = code_from_idempotent(alg, alg.one());
  CHECK(whole.dimension() == 4);
  CHECK(dual_code(alg, whole).dimension() == 0);
  const auto zero = code_from_idempotent(alg, alg.zero());
  CHECK(zero.dimension() == 0);
  CHECK(dual_code(alg, zero).dimension() == 4);
}

TEST_CASE("code laws for every class") {
  std::size_t classes = 0;
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      if (!coprime(q, n)) continue;
      for (const auto& g : group::groups_of_order(n)) {
        const Algebra alg(g, gf::SmallField::make(q));
        const auto& f = alg.field();
        const auto sys = idem::primitive_idempotents(alg);
        for (std::size_t k = 0; k < sys.primitives.size(); ++k) {
          const auto c = code_from_class(alg, sys, k);
          const auto d = dual_code(alg, c);
          INFO(g.name() << " over GF(" << q << ") class " << sys.primitives[k].cls.representative);
          REQUIRE(c.dimension() == sys.primitives[k].cls.orbit.size());
          REQUIRE(c.dimension() + d.dimension() == n);
          REQUIRE(dual_code(alg, d).basis == c.basis);
          REQUIRE(is_ideal(alg, c));
          REQUIRE(is_ideal(alg, d));
          // Direct definitions: C within C^perp, and C + C^perp the whole space.
          bool orthogonal = true;
          for (std::size_t i = 0; i < c.dimension() && orthogonal; ++i)
            for (std::size_t j = 0; j < c.dimension() && orthogonal; ++j)
              orthogonal = inner_product(alg, row_elem(alg, c.basis, i), row_elem(alg, c.basis, j)) == 0;
          const bool trivial_hull = linalg::rank(f, c.basis.stacked(d.basis)) == n;
          const auto cls = classify_code(alg, sys, k);
          CHECK(cls.agrees());
          CHECK((cls.kind == CodeKind::LCD) == trivial_hull);
          CHECK((cls.kind == CodeKind::SelfOrthogonal) == orthogonal);
          CHECK(trivial_hull != orthogonal);
          ++classes;
        }
      }
    }
  }
  CHECK(classes > 2000);
}

TEST_CASE("dual of a class code is the sum of the others") {
  for (std::uint64_t q : {2u, 3u}) {
    for (std::uint64_t n = 1; n <= 49; ++n) {
      if (!coprime(q, n)) continue;
      for (const auto& g : group::groups_of_order(n)) {
        const Algebra alg(g, gf::SmallField::make(q));
        const auto sys = idem::primitive_idempotents(alg);
        for (std::size_t k = 0; k < sys.primitives.size(); ++k) {
          CHECK(dual_structure_check(alg, sys, k));
          const auto inv = inverse_class(sys, k);
          const auto& h = sys.split.coprime_part;
          const auto psi = group::character_at(h, sys.primitives[k].cls.representative);
          const auto target = group::character_index(h, group::char_power(h, psi, -1));
          const auto& orbit = sys.primitives[inv].cls.orbit;
          CHECK(std::find(orbit.begin(), orbit.end(), target) != orbit.end());
        }
      }
    }
  }
}

TEST_CASE("minimum distance matches brute force") {
  for (std::uint64_t q : {2u, 3u, 4u}) {
    for (const char* spec : {"C5", "C7", "C3xC3", "C11", "C13", "C15", "C5xC5", "C21"}) {
      const auto alg = make(q, spec);
      if (!coprime(q, alg.dimension())) continue;
      const auto sys = idem::primitive_idempotents(alg);
      for (std::size_t k = 0; k < sys.primitives.size(); ++k) {
        const auto c = code_from_class(alg, sys, k);
        if (support::algebra_size(q, c.dimension(), 1u << 12) == 0) {
          CHECK_FALSE(min_distance(alg, c, 1u << 4).has_value());
          continue;
        }
        std::uint64_t best = c.length() + 1;
        for (const auto& w : codewords(alg, c))
          if (!alg.is_zero(w)) best = std::min<std::uint64_t>(best, alg.support(w).size());
        CHECK(min_distance(alg, c) == std::optional<std::uint64_t>{best});
      }
    }
  }
}

TEST_CASE("all-LCD conditions") {
  auto report = [](std::uint64_t q, const char* spec) {
    const auto a = make(q, spec);
    return lcd_equivalence_report(a, idem::primitive_idempotents(a));
  };
  const auto good = report(2, "C3xC9");
  CHECK(good.all_lcd);
  CHECK(good.none_self_orthogonal);
  CHECK(good.lcd_of_order_n);
  CHECK(good.order_n_not_self_orthogonal);
  CHECK(good.star_clean);
  CHECK(good.witness_t == std::optional<std::uint64_t>{3});
  CHECK(good.consistent());
  const auto bad = report(2, "C3xC15");
  CHECK_FALSE(bad.all_lcd);
  CHECK_FALSE(bad.none_self_orthogonal);
  CHECK_FALSE(bad.lcd_of_order_n);
  CHECK_FALSE(bad.order_n_not_self_orthogonal);
  CHECK_FALSE(bad.star_clean);
  CHECK(bad.consistent());
  const auto one = report(2, "C1");
  CHECK(one.degenerate);
  CHECK(one.all_lcd);

  for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const auto f = gf::SmallField::make(q);
    for (std::uint64_t n = 3; n <= 80; ++n) {
      if (!coprime(q, n)) continue;
      for (const auto& g : group::groups_of_order(n)) {
        if (g.exponent() <= 2) continue;
        const Algebra alg(g, f);
        const auto r = lcd_equivalence_report(alg, idem::primitive_idempotents(alg));
        CHECK(r.consistent());
        CHECK(r.star_clean == decision::criterion_sigma1(q, g, -1).verdict);
        CHECK(r.classes.size() == idem::cyclotomic_classes(g, q).size());
      }
    }
  }
}
