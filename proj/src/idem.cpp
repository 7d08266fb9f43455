#include "starclean/idem.hpp"

#include <algorithm>
#include <numeric>

#include "starclean/error.hpp"
#include "starclean/numtheory.hpp"

namespace starclean::idem {

namespace {

unsigned splitting_degree(std::uint64_t q, std::uint64_t m) {
  if (m <= 1) return 1;
  const std::uint64_t d = numtheory::mul_order(static_cast<std::int64_t>(q), m);
  if (d > gf::kMaxSplittingDegree) throw LimitExceeded("splitting field degree " + std::to_string(d) + " is too large");
  return static_cast<unsigned>(d);
}

// <phi, h> for exponent vectors, valued in Z/m.
std::uint64_t pairing(const std::vector<std::uint64_t>& weights, const std::vector<std::uint64_t>& c,
                      const std::vector<std::uint64_t>& a, std::uint64_t m) {
  std::uint64_t e = 0;
  for (std::size_t j = 0; j < c.size(); ++j) e = (e + numtheory::mul_mod(weights[j] * c[j] % m, a[j], m)) % m;
  return e;
}

}  // namespace

std::vector<CyclotomicClass> cyclotomic_classes(const AbelianGroup& h, std::uint64_t q) {
  if (std::gcd(q, h.order()) != 1) throw InvalidInput("cyclotomic classes need gcd(q, |H|) = 1");
  std::vector<CyclotomicClass> out;
  std::vector<bool> seen(h.order(), false);
  const auto qi = static_cast<std::int64_t>(q % std::max<std::uint64_t>(h.exponent(), 1));
  for (ElemIndex i = 0; i < h.order(); ++i) {
    if (seen[i]) continue;
    CyclotomicClass cls;
    cls.representative = i;
    auto psi = group::character_at(h, i);
    cls.order = group::char_order(h, psi);
    ElemIndex j = i;
    do {
      seen[j] = true;
      cls.orbit.push_back(j);
      psi = group::char_power(h, psi, qi);
      j = group::character_index(h, psi);
    } while (j != i);
    out.push_back(std::move(cls));
  }
  return out;
}

SplittingContext::SplittingContext(std::shared_ptr<const gf::SmallField> base, AbelianGroup h)
    : base_(std::move(base)),
      big_(gf::Field::build_splitting(base_->characteristic(), base_->degree(),
                                      splitting_degree(base_->size(), h.exponent()))),
      table_(std::move(h), big_),
      embedding_(base_, big_) {}

algebra::Element<gf::Field> SplittingContext::e_psi(const group::Character& psi) const {
  const auto& h = group();
  const auto& f = *big_;
  const auto inv_order = f.inv(f.from_int(static_cast<std::int64_t>(h.order() % f.characteristic())));
  algebra::Element<gf::Field> out;
  out.coeffs.reserve(h.order());
  for (ElemIndex g = 0; g < h.order(); ++g) out.coeffs.push_back(f.mul(inv_order, table_.value(psi, g)));
  return out;
}

AlgebraElem SplittingContext::orbit_idempotent(const CyclotomicClass& cls) const {
  const auto& h = group();
  const auto& f = *big_;
  const std::uint64_t m = h.exponent();
  const std::uint64_t p = f.characteristic();
  const auto& fs = h.invariant_factors();
  std::vector<std::uint64_t> weights;
  for (auto mj : fs) weights.push_back(m / mj);
  std::vector<std::vector<std::uint64_t>> orbit_exps;
  for (auto idx : cls.orbit) orbit_exps.push_back(h.exponents(idx));

  AlgebraElem out{std::vector<gf::SmallField::Elem>(h.order(), 0)};
  const auto inv_order = base_->inv(base_->from_int(static_cast<std::int64_t>(h.order() % p)));
  std::vector<std::uint64_t> counts(m);
  for (ElemIndex g = 0; g < h.order(); ++g) {
    const auto a = h.exponents(g);
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto& c : orbit_exps) ++counts[pairing(weights, c, a, m)];
    gf::FieldElem sum = f.zero();
    for (std::uint64_t j = 0; j < m; ++j) {
      const std::uint64_t k = counts[j] % p;
      if (k == 0) continue;
      const auto& w = table_.omega_power(j);
      for (std::size_t i = 0; i < sum.c.size(); ++i)
        sum.c[i] = static_cast<gf::Coeff>((sum.c[i] + k * w.c[i]) % p);
    }
    if (!f.in_base(sum)) throw ConsistencyError("orbit sum coefficient is not fixed by Frobenius");
    const auto small = embedding_.from_big(sum);
    if (!small) throw ConsistencyError("orbit sum coefficient outside the embedded base field");
    out.coeffs[g] = base_->mul(*small, inv_order);
  }
  return out;
}

std::vector<AlgebraElem> PrimitiveSystem::elements() const {
  std::vector<AlgebraElem> out;
  out.reserve(primitives.size());
  for (const auto& p : primitives) out.push_back(p.element);
  return out;
}

PrimitiveSystem primitive_idempotents(const Algebra& alg) {
  const auto& f = alg.field();
  PrimitiveSystem sys;
  sys.split = group::sylow_split(alg.group(), f.characteristic());
  const auto& h = sys.split.coprime_part;
  SplittingContext ctx(alg.field_ptr(), h);
  for (auto& cls : cyclotomic_classes(h, f.size())) {
    const AlgebraElem local = ctx.orbit_idempotent(cls);
    AlgebraElem e = alg.zero();
    for (ElemIndex i = 0; i < h.order(); ++i) e.coeffs[sys.split.embed_h[i]] = local.coeffs[i];
    sys.primitives.push_back({std::move(cls), std::move(e)});
  }
  return sys;
}

void for_each_idempotent(const Algebra& alg, std::span<const AlgebraElem> primitives,
                         const std::function<void(const AlgebraElem&)>& f, std::uint64_t max_subsets) {
  const std::size_t s = primitives.size();
  if (s >= 63 || (std::uint64_t{1} << s) > max_subsets)
    throw LimitExceeded("2^" + std::to_string(s) + " idempotents exceed the enumeration bound of " +
                        std::to_string(max_subsets));
  const std::uint64_t total = std::uint64_t{1} << s;
  AlgebraElem e = alg.zero();
  f(e);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    e = alg.zero();
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1) e = alg.add(e, primitives[i]);
    f(e);
  }
}

std::vector<AlgebraElem> all_idempotents(const Algebra& alg, std::span<const AlgebraElem> primitives,
                                         std::uint64_t max_subsets) {
  std::vector<AlgebraElem> out;
  for_each_idempotent(alg, primitives, [&](const AlgebraElem& e) { out.push_back(e); }, max_subsets);
  return out;
}

bool idempotent_support_check(const Algebra& alg, const AlgebraElem& e, const group::SylowSplit& split) {
  if (!alg.is_idempotent(e)) throw InvalidInput("support check expects an idempotent");
  std::vector<bool> in_h(alg.dimension(), false);
  for (auto g : split.embed_h) in_h[g] = true;
  for (auto g : alg.support(e))
    if (!in_h[g]) return false;
  return true;
}

std::vector<std::pair<ElemIndex, std::uint64_t>> f2_orbit_form(const Algebra& alg, const AlgebraElem& e) {
  const auto& g = alg.group();
  if (alg.field().size() != 2) throw InvalidInput("orbit form is defined over GF(2)");
  if (g.order() % 2 == 0) throw InvalidInput("orbit form needs a group of odd order");
  const auto support = alg.support(e);
  std::vector<bool> in_support(alg.dimension(), false);
  for (auto x : support) in_support[x] = true;
  std::vector<bool> done(alg.dimension(), false);
  std::vector<std::pair<ElemIndex, std::uint64_t>> out;
  for (auto x : support) {
    if (done[x]) continue;
    std::uint64_t len = 0;
    ElemIndex y = x;
    do {
      if (!in_support[y]) throw InvalidInput("support is not closed under squaring, so the element is not idempotent");
      done[y] = true;
      ++len;
      y = g.mul(y, y);
    } while (y != x);
    out.emplace_back(x, len);
  }
  return out;
}

}  // namespace starclean::idem
