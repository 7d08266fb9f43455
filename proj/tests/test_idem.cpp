#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "starclean/error.hpp"
#include "starclean/idem.hpp"
#include "support.hpp"

using namespace starclean;
using namespace starclean::idem;
using algebra::parse;

namespace {

Algebra make(std::uint64_t q, const char* g) { return Algebra(AbelianGroup::parse(g), gf::SmallField::make(q)); }

std::vector<std::size_t> sizes(const std::vector<CyclotomicClass>& cs) {
  std::vector<std::size_t> out;
  for (const auto& c : cs) out.push_back(c.orbit.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::set<ElemIndex>> as_sets(const std::vector<CyclotomicClass>& cs) {
  std::vector<std::set<ElemIndex>> out;
  for (const auto& c : cs) out.emplace_back(c.orbit.begin(), c.orbit.end());
  return out;
}

}  // namespace

TEST_CASE("cyclotomic class examples") {
  const auto c7 = cyclotomic_classes(AbelianGroup::parse("C7"), 2);
  CHECK(sizes(c7) == std::vector<std::size_t>{1, 3, 3});
  CHECK(as_sets(c7) == std::vector<std::set<ElemIndex>>{{0}, {1, 2, 4}, {3, 5, 6}});
  CHECK(cyclotomic_classes(AbelianGroup{}, 5).size() == 1);
  CHECK(sizes(cyclotomic_classes(AbelianGroup::parse("C3xC3"), 2)) == std::vector<std::size_t>{1, 2, 2, 2, 2});
  CHECK_THROWS_AS(cyclotomic_classes(AbelianGroup::parse("C6"), 2), InvalidInput);
}

TEST_CASE("cyclotomic classes partition the character group") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u}) {
    for (std::uint64_t n = 1; n <= 150; ++n) {
      if (std::gcd(n, q) != 1) continue;
      for (const auto& h : group::groups_of_order(n)) {
        const auto classes = cyclotomic_classes(h, q);
        std::vector<int> seen(n, 0);
        ElemIndex prev = 0;
        for (std::size_t i = 0; i < classes.size(); ++i) {
          const auto& c = classes[i];
          if (i) CHECK(c.representative > prev);
          prev = c.representative;
          CHECK(c.orbit.front() == c.representative);
          CHECK(*std::min_element(c.orbit.begin(), c.orbit.end()) == c.representative);
          const auto psi = group::character_at(h, c.representative);
          CHECK(c.order == group::char_order(h, psi));
          const std::uint64_t s = c.order == 1 ? 1 : numtheory::mul_order(static_cast<std::int64_t>(q), c.order);
          CHECK(c.orbit.size() == s);
          for (std::size_t j = 0; j < c.orbit.size(); ++j) {
            ++seen[c.orbit[j]];
            const auto next = group::char_power(h, group::character_at(h, c.orbit[j]), static_cast<std::int64_t>(q));
            CHECK(group::character_index(h, next) == c.orbit[(j + 1) % c.orbit.size()]);
          }
        }
        for (int s : seen) CHECK(s == 1);
      }
    }
  }
}

TEST_CASE("e_psi formula example") {
  const SplittingContext ctx(gf::SmallField::make(2), AbelianGroup::parse("C3"));
  const auto& f = ctx.field();
  REQUIRE(f.degree() == 2);
  const auto w = f.root_of_unity(3);
  const auto e = ctx.e_psi(group::Character{{1}});
  CHECK(e.coeffs == std::vector<gf::FieldElem>{f.one(), w, f.mul(w, w)});
  const auto triv = ctx.e_psi(group::Character{{0}});
  CHECK(triv.coeffs == std::vector<gf::FieldElem>{f.one(), f.one(), f.one()});
  CHECK_THROWS_AS(SplittingContext(gf::SmallField::make(3), AbelianGroup::parse("C3")), InvalidInput);
}

TEST_CASE("character idempotents are complete and orthogonal") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    for (std::uint64_t n = 1; n <= 25; ++n) {
      if (std::gcd(n, q) != 1) continue;
      for (const auto& h : group::groups_of_order(n)) {
        const SplittingContext ctx(gf::SmallField::make(q), h);
        const algebra::GroupAlgebra<gf::Field> big(h, ctx.field_ptr());
        std::vector<algebra::Element<gf::Field>> es;
        auto sum = big.zero();
        for (const auto& psi : ctx.table().characters()) {
          es.push_back(ctx.e_psi(psi));
          sum = big.add(sum, es.back());
        }
        CHECK(sum == big.one());
        for (std::size_t i = 0; i < es.size(); ++i) {
          REQUIRE(big.is_idempotent(es[i]));
          for (std::size_t j = i + 1; j < es.size(); ++j) REQUIRE(big.is_zero(big.mul(es[i], es[j])));
        }
      }
    }
  }
}

TEST_CASE("primitive idempotent examples") {
  const auto a = make(2, "C3xC3");
  const auto sys = primitive_idempotents(a);
  const auto want = parse(a, "1 + x1 + x1^2");
  const auto target = a.mul(want, parse(a, "x2 + x2^2"));
  bool found = false;
  for (const auto& p : sys.primitives)
    if (p.cls.representative == 1) found = p.element == target;
  CHECK(found);

  const auto a49 = make(2, "C7xC7");
  const auto s49 = primitive_idempotents(a49);
  const auto t49 = a49.mul(parse(a49, "1 + x1 + x1^2 + x1^3 + x1^4 + x1^5 + x1^6"),
                           parse(a49, "1 + x2^3 + x2^5 + x2^6"));
  found = false;
  for (const auto& p : s49.primitives)
    if (p.cls.representative == 1) found = p.element == t49;
  CHECK(found);

  const auto triv = primitive_idempotents(make(7, "C1"));
  REQUIRE(triv.primitives.size() == 1);
  CHECK(triv.primitives[0].element == make(7, "C1").one());
}

TEST_CASE("primitive idempotents form a complete orthogonal system") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      for (const auto& g : group::groups_of_order(n)) {
        const Algebra alg(g, gf::SmallField::make(q));
        const auto sys = primitive_idempotents(alg);
        const auto& h = sys.split.coprime_part;
        REQUIRE(sys.primitives.size() == cyclotomic_classes(h, q).size());
        std::size_t dim = 0;
        auto sum = alg.zero();
        for (std::size_t i = 0; i < sys.primitives.size(); ++i) {
          const auto& e = sys.primitives[i].element;
          dim += sys.primitives[i].cls.orbit.size();
          sum = alg.add(sum, e);
          REQUIRE_FALSE(alg.is_zero(e));
          REQUIRE(alg.is_idempotent(e));
          REQUIRE(idempotent_support_check(alg, e, sys.split));
          for (std::size_t j = i + 1; j < sys.primitives.size(); ++j)
            REQUIRE(alg.is_zero(alg.mul(e, sys.primitives[j].element)));
        }
        CHECK(sum == alg.one());
        CHECK(dim == h.order());
      }
    }
  }
}

TEST_CASE("orbit sums are fixed by the base Frobenius") {
  for (std::uint64_t q : {2u, 3u, 4u, 9u}) {
    for (const char* spec : {"C5", "C7", "C13", "C4xC4", "C11xC11", "C3xC15"}) {
      const auto h = AbelianGroup::parse(spec);
      if (std::gcd(h.order(), q) != 1) continue;
      const SplittingContext ctx(gf::SmallField::make(q), h);
      const auto& f = ctx.field();
      const algebra::GroupAlgebra<gf::Field> big(h, ctx.field_ptr());
      for (const auto& cls : cyclotomic_classes(h, q)) {
        auto sum = big.zero();
        for (auto idx : cls.orbit) sum = big.add(sum, ctx.e_psi(group::character_at(h, idx)));
        for (const auto& c : sum.coeffs) CHECK(f.frobenius_base(c) == c);
        const auto small = ctx.orbit_idempotent(cls);
        for (std::size_t i = 0; i < small.coeffs.size(); ++i)
          CHECK(ctx.embedding().to_big(small.coeffs[i]) == sum.coeffs[i]);
      }
    }
  }
}

TEST_CASE("subset sums are exactly the idempotents") {
  const auto a7 = make(2, "C7");
  const auto p7 = primitive_idempotents(a7).elements();
  CHECK(all_idempotents(a7, p7).size() == 8);
  const auto a33 = make(2, "C3xC3");
  const auto p33 = primitive_idempotents(a33).elements();
  const auto i33 = all_idempotents(a33, p33);
  CHECK(i33.size() == 32);
  for (std::size_t i = 0; i < i33.size(); i += 5) CHECK(a33.is_idempotent(i33[i]));
  CHECK_THROWS_AS(all_idempotents(a33, p33, 16), LimitExceeded);
  std::uint64_t visits = 0;
  for_each_idempotent(a33, p33, [&](const AlgebraElem&) { ++visits; }, 32);
  CHECK(visits == 32);

  std::size_t compared = 0;
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    for (std::uint64_t n = 1; support::algebra_size(q, n, 1u << 13) != 0; ++n) {
      for (const auto& g : group::groups_of_order(n)) {
        const Algebra alg(g, gf::SmallField::make(q));
        auto brute = support::brute_idempotents(alg);
        auto mine = all_idempotents(alg, primitive_idempotents(alg).elements());
        auto key = [](const AlgebraElem& a, const AlgebraElem& b) { return a.coeffs < b.coeffs; };
        std::sort(brute.begin(), brute.end(), key);
        std::sort(mine.begin(), mine.end(), key);
        CHECK(mine == brute);
        ++compared;
      }
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("primitive idempotents do not split") {
  for (const char* spec : {"C7", "C3xC3", "C5", "C2xC3", "C9", "C15"}) {
    for (std::uint64_t q : {2u, 4u}) {
      const Algebra alg(AbelianGroup::parse(spec), gf::SmallField::make(q));
      if (support::algebra_size(q, alg.dimension(), 1u << 16) == 0) continue;
      const auto brute = support::brute_idempotents(alg);
      for (const auto& p : primitive_idempotents(alg).primitives)
        for (const auto& f : brute)
          if (!alg.is_zero(f) && f != p.element) CHECK(alg.mul(f, p.element) != f);
    }
  }
}

TEST_CASE("idempotent support") {
  const auto a = make(2, "C2xC3");
  const auto split = group::sylow_split(a.group(), 2);
  CHECK(idempotent_support_check(a, a.one(), split));
  const auto brute = support::brute_idempotents(a);
  CHECK(brute.size() == 4);
  for (const auto& e : brute) CHECK(idempotent_support_check(a, e, split));
  CHECK_THROWS_AS(idempotent_support_check(a, a.basis(1), split), InvalidInput);

  for (std::uint64_t q : {2u, 3u, 4u}) {
    for (std::uint64_t n = 1; support::algebra_size(q, n, 1u << 14) != 0; ++n) {
      for (const auto& g : group::groups_of_order(n)) {
        const Algebra alg(g, gf::SmallField::make(q));
        const auto s = group::sylow_split(g, alg.field().characteristic());
        for (const auto& e : support::brute_idempotents(alg)) CHECK(idempotent_support_check(alg, e, s));
      }
    }
  }
}

TEST_CASE("squaring orbit form over GF(2)") {
  const auto a1 = make(2, "C7");
  using Orbits = std::vector<std::pair<ElemIndex, std::uint64_t>>;
  CHECK(f2_orbit_form(a1, a1.one()) == Orbits{{0, 1}});
  CHECK(f2_orbit_form(a1, parse(a1, "x1 + x1^2 + x1^4")) == Orbits{{1, 3}});
  const auto a3 = make(2, "C3");
  CHECK(f2_orbit_form(a3, parse(a3, "x1 + x1^2")) == Orbits{{1, 2}});
  CHECK_THROWS_AS(f2_orbit_form(a1, parse(a1, "x1 + x1^2")), InvalidInput);
  CHECK_THROWS_AS(f2_orbit_form(make(3, "C7"), make(3, "C7").one()), InvalidInput);

  for (const char* spec : {"C3xC3", "C7", "C15", "C3xC9", "C5xC5", "C21"}) {
    const auto alg = make(2, spec);
    const auto& g = alg.group();
    for (const auto& e : all_idempotents(alg, primitive_idempotents(alg).elements())) {
      std::set<ElemIndex> covered;
      for (auto [rep, len] : f2_orbit_form(alg, e)) {
        ElemIndex x = rep;
        for (std::uint64_t i = 0; i < len; ++i, x = g.mul(x, x)) CHECK(covered.insert(x).second);
        CHECK(x == rep);
      }
      const auto supp = alg.support(e);
      CHECK(covered == std::set<ElemIndex>(supp.begin(), supp.end()));
    }
  }
}
