#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starclean/gf.hpp"

namespace starclean::group {

/// Group elements are addressed by their position in the lexicographic order
/// of exponent vectors (first coordinate most significant).
using ElemIndex = std::size_t;

/// Groups above this order are rejected at construction.
inline constexpr std::uint64_t kMaxGroupOrder = std::uint64_t{1} << 20;

/// Finite abelian group C_{m_1} x ... x C_{m_r} with 1 < m_1 | ... | m_r.
class AbelianGroup {
 public:
  /// The trivial group.
  AbelianGroup() = default;

  /// Validates the divisibility chain.
  static AbelianGroup from_invariant_factors(std::vector<std::uint64_t> factors);
  /// Any list of cyclic orders (1 allowed, dropped); normalizes to invariant factors.
  static AbelianGroup from_cyclic_factors(std::span<const std::uint64_t> orders);
  /// Grammar: C<n> ( "x" C<n> )*, case-insensitive. "C1" is the trivial group.
  static AbelianGroup parse(std::string_view spec);

  const std::vector<std::uint64_t>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::uint64_t order() const { return order_; }
  std::uint64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_trivial() const { return factors_.empty(); }

  ElemIndex identity() const { return 0; }
  std::vector<std::uint64_t> exponents(ElemIndex g) const;
  ElemIndex index_of(std::span<const std::uint64_t> exps) const;
  /// Generator x_i (0-based i).
  ElemIndex generator(std::size_t i) const;

  ElemIndex mul(ElemIndex a, ElemIndex b) const;
  ElemIndex inverse(ElemIndex a) const;
  ElemIndex power(ElemIndex a, std::int64_t v) const;
  std::uint64_t element_order(ElemIndex a) const;

  /// "C3xC9"; the trivial group is "C1".
  std::string name() const;
  /// "x1^2*x2", identity "1".
  std::string render_element(ElemIndex g) const;
  ElemIndex parse_element(std::string_view text) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }

 private:
  explicit AbelianGroup(std::vector<std::uint64_t> factors);

  std::vector<std::uint64_t> factors_;
  std::vector<std::size_t> strides_;
  std::uint64_t order_ = 1;
};

/// All abelian groups of order n, sorted by invariant-factor list.
std::vector<AbelianGroup> groups_of_order(std::uint64_t n);

/// G = P x H with P the Sylow p-subgroup and gcd(p, |H|) = 1.
struct SylowSplit {
  std::uint64_t p = 0;
  AbelianGroup group;
  AbelianGroup p_part;
  AbelianGroup coprime_part;
  /// embed_p[i] / embed_h[j]: index in G of the i-th element of P / j-th of H.
  std::vector<ElemIndex> embed_p;
  std::vector<ElemIndex> embed_h;

  /// Unique (P index, H index) with embed_p * embed_h = g.
  std::pair<ElemIndex, ElemIndex> factor(ElemIndex g) const;
};

SylowSplit sylow_split(const AbelianGroup& g, std::uint64_t p);

/// Character of H given by exponents c_j relative to the invariant factors:
/// psi(x_j) = w^((m / m_j) c_j), w a primitive m-th root of unity, m = exp(H).
struct Character {
  std::vector<std::uint64_t> exponents;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Characters share the index layout of H itself.
Character character_at(const AbelianGroup& h, ElemIndex index);
ElemIndex character_index(const AbelianGroup& h, const Character& psi);
/// e with psi(g) = w^e, taken mod exp(H).
std::uint64_t char_exponent(const AbelianGroup& h, const Character& psi, ElemIndex g);
std::uint64_t char_order(const AbelianGroup& h, const Character& psi);
/// psi^k.
Character char_power(const AbelianGroup& h, const Character& psi, std::int64_t k);

/// Character values of H in a field holding a primitive exp(H)-th root of unity.
class CharacterTable {
 public:
  CharacterTable(AbelianGroup h, std::shared_ptr<const gf::Field> field);

  const AbelianGroup& group() const { return h_; }
  const gf::Field& field() const { return *field_; }
  std::shared_ptr<const gf::Field> field_ptr() const { return field_; }
  std::uint64_t exponent() const { return m_; }
  std::size_t size() const { return static_cast<std::size_t>(h_.order()); }

  /// All |H| characters in index order.
  std::vector<Character> characters() const;
  const gf::FieldElem& omega_power(std::uint64_t j) const { return omega_powers_[j % m_]; }
  gf::FieldElem value(const Character& psi, ElemIndex g) const;

 private:
  AbelianGroup h_;
  std::shared_ptr<const gf::Field> field_;
  std::uint64_t m_;
  std::vector<gf::FieldElem> omega_powers_;
};

}  // namespace starclean::group
