#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "starclean/algebra.hpp"
#include "starclean/gf.hpp"
#include "starclean/group.hpp"

namespace starclean::idem {

using algebra::Algebra;
using algebra::AlgebraElem;
using group::AbelianGroup;
using group::ElemIndex;

/// Default cap on subset-sum enumeration.
inline constexpr std::uint64_t kDefaultMaxSubsets = std::uint64_t{1} << 20;

/// Orbit of a character of H under psi -> psi^q. Characters are named by
/// their index in H (see group::character_at).
struct CyclotomicClass {
  ElemIndex representative = 0;
  /// psi, psi^q, psi^(q^2), ... starting from the representative.
  std::vector<ElemIndex> orbit;
  /// Order of every character in the class.
  std::uint64_t order = 1;
};

/// Classes sorted by representative, which is the least index (hence least
/// exponent vector) in each orbit. Requires gcd(q, |H|) = 1.
std::vector<CyclotomicClass> cyclotomic_classes(const AbelianGroup& h, std::uint64_t q);

/// GF(q)(w_m) for m = exp(H), with character values and the embedding of GF(q).
class SplittingContext {
 public:
  SplittingContext(std::shared_ptr<const gf::SmallField> base, AbelianGroup h);

  const AbelianGroup& group() const { return table_.group(); }
  const gf::Field& field() const { return *big_; }
  std::shared_ptr<const gf::Field> field_ptr() const { return big_; }
  const group::CharacterTable& table() const { return table_; }
  const gf::BaseEmbedding& embedding() const { return embedding_; }
  const gf::SmallField& base() const { return *base_; }

  /// (1/|H|) sum_h psi(h) h, over the splitting field.
  algebra::Element<gf::Field> e_psi(const group::Character& psi) const;

  /// Orbit sum of e_phi over the class, checked fixed by x -> x^q and
  /// expressed over GF(q), as an element of GF(q) H.
  AlgebraElem orbit_idempotent(const CyclotomicClass& cls) const;

 private:
  std::shared_ptr<const gf::SmallField> base_;
  std::shared_ptr<const gf::Field> big_;
  group::CharacterTable table_;
  gf::BaseEmbedding embedding_;
};

struct PrimitiveIdempotent {
  CyclotomicClass cls;
  /// Element of GF(q) G, supported on the embedded coprime part.
  AlgebraElem element;
};

/// Primitive idempotents of GF(q) G together with the Sylow split they live on.
struct PrimitiveSystem {
  group::SylowSplit split;
  std::vector<PrimitiveIdempotent> primitives;

  std::vector<AlgebraElem> elements() const;
};

/// One primitive idempotent per q-cyclotomic class of the coprime part H,
/// embedded into G.
PrimitiveSystem primitive_idempotents(const Algebra& alg);

/// Calls f on every subset sum of the primitives, masks in increasing order.
/// Throws LimitExceeded when 2^s exceeds max_subsets.
void for_each_idempotent(const Algebra& alg, std::span<const AlgebraElem> primitives,
                         const std::function<void(const AlgebraElem&)>& f,
                         std::uint64_t max_subsets = kDefaultMaxSubsets);
std::vector<AlgebraElem> all_idempotents(const Algebra& alg, std::span<const AlgebraElem> primitives,
                                         std::uint64_t max_subsets = kDefaultMaxSubsets);

/// True iff every support element of the idempotent e lies in the embedded H.
bool idempotent_support_check(const Algebra& alg, const AlgebraElem& e, const group::SylowSplit& split);

/// Squaring orbits {g, g^2, g^4, ...} covering the support of an element of
/// GF(2) G, |G| odd; (least member, orbit length), sorted by member.
std::vector<std::pair<ElemIndex, std::uint64_t>> f2_orbit_form(const Algebra& alg, const AlgebraElem& e);

}  // namespace starclean::idem
