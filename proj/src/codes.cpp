#include "starclean/codes.hpp"

#include <algorithm>

#include "starclean/error.hpp"
#include "starclean/numtheory.hpp"

namespace starclean::codes {

namespace {

void require_semisimple(const Algebra& alg) {
  if (alg.group().order() % alg.field().characteristic() == 0)
    throw InvalidInput("codes need gcd(characteristic, |G|) = 1");
}

AlgebraElem row_elem(const linalg::Matrix& m, std::size_t r) {
  const auto* row = m.row(r);
  return AlgebraElem{std::vector<gf::SmallField::Elem>(row, row + m.cols())};
}

}  // namespace

AbelianCode code_from_idempotent(const Algebra& alg, const AlgebraElem& e) {
  linalg::Matrix m(0, alg.dimension());
  for (group::ElemIndex g = 0; g < alg.dimension(); ++g) m.append_row(alg.shift(e, g).coeffs);
  return AbelianCode{{}, linalg::row_space(alg.field(), std::move(m))};
}

AbelianCode code_from_class(const Algebra& alg, const idem::PrimitiveSystem& sys, std::size_t cls) {
  require_semisimple(alg);
  auto c = code_from_idempotent(alg, sys.primitives.at(cls).element);
  c.classes = {cls};
  return c;
}

AbelianCode code_from_classes(const Algebra& alg, const idem::PrimitiveSystem& sys, std::vector<std::size_t> classes) {
  require_semisimple(alg);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  AlgebraElem e = alg.zero();
  for (auto i : classes) e = alg.add(e, sys.primitives.at(i).element);
  auto c = code_from_idempotent(alg, e);
  c.classes = std::move(classes);
  return c;
}

gf::SmallField::Elem inner_product(const Algebra& alg, const AlgebraElem& a, const AlgebraElem& b) {
  if (a.coeffs.size() != alg.dimension() || b.coeffs.size() != alg.dimension())
    throw InvalidInput("algebra element from a different context");
  const auto& f = alg.field();
  gf::SmallField::Elem s = 0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) s = f.add(s, f.mul(a.coeffs[i], b.coeffs[i]));
  return s;
}

AbelianCode dual_code(const Algebra& alg, const AbelianCode& c) {
  if (c.dimension() == 0) {
    linalg::Matrix id(alg.dimension(), alg.dimension());
    for (std::size_t i = 0; i < alg.dimension(); ++i) id.at(i, i) = 1;
    return AbelianCode{{}, std::move(id)};
  }
  return AbelianCode{{}, linalg::nullspace(alg.field(), c.basis)};
}

std::size_t inverse_class(const idem::PrimitiveSystem& sys, std::size_t cls) {
  const auto& h = sys.split.coprime_part;
  const auto psi = group::character_at(h, sys.primitives.at(cls).cls.representative);
  const auto inv = group::character_index(h, group::char_power(h, psi, -1));
  for (std::size_t i = 0; i < sys.primitives.size(); ++i) {
    const auto& orbit = sys.primitives[i].cls.orbit;
    if (std::find(orbit.begin(), orbit.end(), inv) != orbit.end()) return i;
  }
  throw ConsistencyError("inverse character lies in no class");
}

bool dual_structure_check(const Algebra& alg, const idem::PrimitiveSystem& sys, std::size_t cls) {
  const auto code = code_from_class(alg, sys, cls);
  const auto skip = inverse_class(sys, cls);
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < sys.primitives.size(); ++i)
    if (i != skip) others.push_back(i);
  const auto rest = code_from_classes(alg, sys, others);
  return linalg::same_row_space(alg.field(), dual_code(alg, code).basis, rest.basis);
}

CodeClassification classify_code(const Algebra& alg, const idem::PrimitiveSystem& sys, std::size_t cls) {
  const auto& f = alg.field();
  const auto code = code_from_class(alg, sys, cls);
  CodeClassification out;
  out.order = sys.primitives.at(cls).cls.order;
  out.dimension = code.dimension();
  out.witness_t = numtheory::solve_power_congruence(static_cast<std::int64_t>(f.size()), -1, out.order);
  out.kind = out.witness_t ? CodeKind::LCD : CodeKind::SelfOrthogonal;

  const auto gram = linalg::mul_transpose(f, code.basis, code.basis);
  out.hull_dimension = code.dimension() - linalg::rank(f, gram);
  out.lcd_linear = out.hull_dimension == 0;
  out.self_orthogonal_linear = out.hull_dimension == code.dimension();
  if (!out.agrees()) throw ConsistencyError("code classification: character test and linear algebra disagree");
  return out;
}

LcdEquivalenceReport lcd_equivalence_report(const Algebra& alg, const idem::PrimitiveSystem& sys) {
  require_semisimple(alg);
  LcdEquivalenceReport r;
  r.n = alg.group().exponent();
  r.degenerate = r.n == 1;
  for (std::size_t i = 0; i < sys.primitives.size(); ++i) {
    auto c = classify_code(alg, sys, i);
    const bool lcd = c.kind == CodeKind::LCD;
    const bool so = c.kind == CodeKind::SelfOrthogonal;
    r.all_lcd = r.all_lcd && lcd;
    r.none_self_orthogonal = r.none_self_orthogonal && !so;
    if (c.order == r.n) {
      r.lcd_of_order_n = r.lcd_of_order_n || lcd;
      r.order_n_not_self_orthogonal = r.order_n_not_self_orthogonal || !so;
    }
    r.classes.push_back(c);
  }
  r.witness_t = numtheory::solve_power_congruence(static_cast<std::int64_t>(alg.field().size()), -1, r.n);
  r.star_clean = r.witness_t.has_value();
  return r;
}

std::optional<std::uint64_t> min_distance(const Algebra& alg, const AbelianCode& c, std::uint64_t max_codewords) {
  const auto& f = alg.field();
  const std::size_t k = c.dimension();
  if (k == 0) return std::nullopt;
  std::uint64_t words = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (words > max_codewords / f.size()) return std::nullopt;
    words *= f.size();
  }
  std::uint64_t best = c.length();
  std::vector<gf::SmallField::Elem> digits(k, 0);
  std::vector<gf::SmallField::Elem> word(c.length());
  for (std::uint64_t w = 1; w < words; ++w) {
    for (std::size_t i = 0; i < k; ++i) {
      if (++digits[i] < f.size()) break;
      digits[i] = 0;
    }
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (digits[i] == 0) continue;
      const auto* row = c.basis.row(i);
      for (std::size_t j = 0; j < word.size(); ++j)
        if (row[j] != 0) word[j] = f.add(word[j], f.mul(digits[i], row[j]));
    }
    const auto weight = static_cast<std::uint64_t>(std::count_if(word.begin(), word.end(), [](auto x) { return x != 0; }));
    best = std::min(best, weight);
  }
  return best;
}

bool is_ideal(const Algebra& alg, const AbelianCode& c) {
  linalg::Matrix images(0, alg.dimension());
  for (std::size_t r = 0; r < c.dimension(); ++r)
    for (std::size_t i = 0; i < alg.group().rank(); ++i)
      images.append_row(alg.shift(row_elem(c.basis, r), alg.group().generator(i)).coeffs);
  return linalg::row_space_within(alg.field(), images, c.basis);
}

}  // namespace starclean::codes
