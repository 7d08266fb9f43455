#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starclean/error.hpp"
#include "starclean/gf.hpp"
#include "starclean/group.hpp"

namespace starclean::algebra {

using group::AbelianGroup;
using group::ElemIndex;

/// Element sum a_g g of F G, coefficients indexed by group element. Zero
/// coefficients are stored explicitly; support() gives the sparse view.
template <class F>
struct Element {
  std::vector<typename F::Elem> coeffs;
  friend bool operator==(const Element&, const Element&) = default;
};

/// The group algebra F G over a field type exposing add/sub/neg/mul/is_zero.
template <class F>
class GroupAlgebra {
 public:
  using Scalar = typename F::Elem;
  using Elem = Element<F>;

  GroupAlgebra(AbelianGroup g, std::shared_ptr<const F> field) : group_(std::move(g)), field_(std::move(field)) {
    const auto n = static_cast<std::size_t>(group_.order());
    // Product table keeps convolution free of index arithmetic.
    if (n <= kTableOrder) {
      table_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = static_cast<std::uint32_t>(group_.mul(a, b));
    }
  }

  const AbelianGroup& group() const { return group_; }
  const F& field() const { return *field_; }
  std::shared_ptr<const F> field_ptr() const { return field_; }
  std::size_t dimension() const { return static_cast<std::size_t>(group_.order()); }

  Elem zero() const { return Elem{std::vector<Scalar>(dimension(), field_->zero())}; }
  Elem one() const { return basis(group_.identity()); }
  Elem basis(ElemIndex g) const {
    Elem e = zero();
    e.coeffs.at(g) = field_->one();
    return e;
  }
  Elem scalar(const Scalar& c) const {
    Elem e = zero();
    e.coeffs[group_.identity()] = c;
    return e;
  }

  Elem add(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    Elem r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = field_->add(r.coeffs[i], b.coeffs[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem neg(const Elem& a) const {
    check(a);
    Elem r = a;
    for (auto& c : r.coeffs) c = field_->neg(c);
    return r;
  }
  Elem scale(const Scalar& s, const Elem& a) const {
    check(a);
    Elem r = a;
    for (auto& c : r.coeffs) c = field_->mul(s, c);
    return r;
  }

  /// Convolution: coefficient of g in a b is the sum over h of a_h b_{h^-1 g}.
  Elem mul(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    const std::size_t n = dimension();
    Elem r = zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (field_->is_zero(a.coeffs[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (field_->is_zero(b.coeffs[j])) continue;
        const std::size_t k = product(i, j);
        r.coeffs[k] = field_->add(r.coeffs[k], field_->mul(a.coeffs[i], b.coeffs[j]));
      }
    }
    return r;
  }

  /// a * g.
  Elem shift(const Elem& a, ElemIndex g) const {
    check(a);
    Elem r = zero();
    for (std::size_t i = 0; i < dimension(); ++i) r.coeffs[product(i, g)] = a.coeffs[i];
    return r;
  }

  bool is_zero(const Elem& a) const {
    for (const auto& c : a.coeffs)
      if (!field_->is_zero(c)) return false;
    return true;
  }
  bool is_idempotent(const Elem& a) const { return mul(a, a) == a; }

  std::vector<ElemIndex> support(const Elem& a) const {
    std::vector<ElemIndex> out;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      if (!field_->is_zero(a.coeffs[i])) out.push_back(i);
    return out;
  }

  std::size_t product(std::size_t a, std::size_t b) const {
    return table_.empty() ? group_.mul(a, b) : table_[a * dimension() + b];
  }

 private:
  static constexpr std::size_t kTableOrder = 2048;

  void check(const Elem& a) const {
    if (a.coeffs.size() != dimension()) throw InvalidInput("algebra element from a different context");
  }

  AbelianGroup group_;
  std::shared_ptr<const F> field_;
  std::vector<std::uint32_t> table_;
};

using Algebra = GroupAlgebra<gf::SmallField>;
using AlgebraElem = Algebra::Elem;

// ------------------------------------------------------------------ involutions

enum class InvolutionKind { Classical, Identity, Sigma1, Sigma2 };

/// Involution spec as written by the user; v is normalized against a group
/// by resolve().
struct Involution {
  InvolutionKind kind = InvolutionKind::Classical;
  std::int64_t v = -1;

  /// "classical" | "identity" | "sigma1:v=<int>" | "sigma2:v=<int>".
  static Involution parse(std::string_view spec);
  std::string spec() const;
  std::string kind_name() const;
};

/// An involution checked against a concrete group and coefficient field.
struct ResolvedInvolution {
  Involution source;
  /// Exponent applied to group elements, in [0, n).
  std::uint64_t v = 0;
  /// Coefficients are raised to the power q (sigma2, field GF(q^2)).
  std::optional<std::uint64_t> coefficient_power;
  /// The map is the identity (classical with exponent <= 2, or identity).
  bool is_identity_map = false;
};

/// Validates invariants: sigma1 needs v^2 = 1 and v != 1 (mod n); sigma2 needs
/// v^2 = 1 (mod n) and a square field; identity only when allowed.
ResolvedInvolution resolve(const Involution& inv, const AbelianGroup& g, const gf::SmallField& f,
                           bool allow_identity = false);

AlgebraElem involute(const Algebra& alg, const AlgebraElem& a, const ResolvedInvolution& inv);
bool is_projection(const Algebra& alg, const AlgebraElem& a, const ResolvedInvolution& inv);

/// Invertibility via the rank of the regular representation.
bool is_unit(const Algebra& alg, const AlgebraElem& a);

struct CleanDecomposition {
  AlgebraElem unit;
  AlgebraElem idempotent;
};

/// a = u + e, trying e over the subset sums of the given primitive idempotents
/// in increasing bitmask order (empty sum first).
CleanDecomposition clean_decomposition(const Algebra& alg, const AlgebraElem& a,
                                       std::span<const AlgebraElem> primitives);

/// "1 + x1*x2^2 + (g + 1)*x1".
std::string render(const Algebra& alg, const AlgebraElem& a);
AlgebraElem parse(const Algebra& alg, std::string_view text);

}  // namespace starclean::algebra
