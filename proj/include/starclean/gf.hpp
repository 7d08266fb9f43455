#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starclean::gf {

using Coeff = std::uint32_t;

/// Largest coefficient field accepted from users.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 24;
/// Largest degree over GF(p) of an internal splitting field.
inline constexpr unsigned kMaxSplittingDegree = 512;

/// Element of GF(p)[x]/(f) as a coefficient vector, low degree first, length deg f.
struct FieldElem {
  std::vector<Coeff> c;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

/// GF(p^(k d)) in a flat polynomial basis over GF(p), with designated base
/// subfield GF(q), q = p^k. The defining polynomial is the least monic
/// irreducible of degree k d, ordering polynomials by the integer
/// sum c_i p^i of their lower coefficients.
class Field {
 public:
  using Elem = FieldElem;

  /// Context for GF(p^(k d)); rejects sizes above kMaxFieldSize.
  static std::shared_ptr<const Field> build(std::uint64_t p, unsigned k, unsigned d);
  /// Same but bounded only by kMaxSplittingDegree. Results are cached.
  static std::shared_ptr<const Field> build_splitting(std::uint64_t p, unsigned k, unsigned d);

  std::uint64_t characteristic() const { return p_; }
  unsigned base_degree() const { return k_; }
  unsigned relative_degree() const { return d_; }
  unsigned degree() const { return k_ * d_; }
  /// q = p^k.
  std::uint64_t base_size() const { return q_; }
  /// p^(k d) when it fits in 64 bits.
  std::optional<std::uint64_t> size() const;
  /// Monic defining polynomial, low degree first, length degree() + 1.
  const std::vector<Coeff>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{std::vector<Coeff>(degree(), 0)}; }
  Elem one() const;
  /// The class of x, printed as "g".
  Elem gen() const;
  Elem from_int(std::int64_t n) const;

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, std::uint64_t e) const;

  /// a^q.
  Elem frobenius_base(const Elem& a) const;
  /// a + a^q + ... + a^(q^(d-1)).
  Elem rel_trace(const Elem& a) const;
  bool in_base(const Elem& a) const { return frobenius_base(a) == a; }

  /// Element of exact multiplicative order m; m must divide |F| - 1.
  Elem root_of_unity(std::uint64_t m) const;
  /// Least primitive element in code order. Only available when |F| - 1 is
  /// small enough to factor by trial division (|F| <= 2^40).
  std::optional<Elem> least_generator() const;

  /// Exact multiplicative order of a nonzero element, given that it divides n.
  std::uint64_t order_dividing(const Elem& a, std::uint64_t n) const;

  /// Base-p code sum c_i p^i; only when |F| fits in 64 bits.
  std::uint64_t to_code(const Elem& a) const;
  Elem from_code(std::uint64_t code) const;

  /// "g^2 + g + 1"; prime-field values print as integers.
  std::string render(const Elem& a) const;
  Elem parse(std::string_view text) const;
  /// "GF(2^3) / x^3 + x + 1".
  std::string describe() const;

 private:
  Field(std::uint64_t p, unsigned k, unsigned d);
  Elem apply_frobenius(const Elem& a) const;

  std::uint64_t p_;
  unsigned k_;
  unsigned d_;
  std::uint64_t q_;
  std::vector<Coeff> modulus_;
  // Column j holds (x^j)^q.
  std::vector<std::vector<Coeff>> frobenius_cols_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::uint64_t, Elem> roots_cache_;
  mutable std::optional<std::optional<Elem>> generator_cache_;
};

/// Coefficient field GF(q), q <= kMaxFieldSize, with elements packed as base-p
/// codes (code 0 = zero, code 1 = one). Multiplication is table-driven up to
/// 2^20 elements.
class SmallField {
 public:
  using Elem = std::uint32_t;

  /// q must be a prime power within kMaxFieldSize.
  static std::shared_ptr<const SmallField> make(std::uint64_t q);

  std::uint64_t size() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  const Field& poly_field() const { return *poly_; }
  std::shared_ptr<const Field> poly_field_ptr() const { return poly_; }
  /// sqrt(q) when the degree is even.
  std::optional<std::uint64_t> sqrt_size() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem from_int(std::int64_t n) const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) {
      const Elem s = a + b;
      return s >= p_ ? s - static_cast<Elem>(p_) : s;
    }
    return add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (p_ == 2 || a == 0) return a;
    if (k_ == 1) return static_cast<Elem>(p_) - a;
    return neg_digits(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// x -> x^(p^j).
  Elem frobenius(Elem a, unsigned j) const;

  FieldElem to_poly(Elem a) const;
  Elem from_poly(const FieldElem& a) const;

  std::string render(Elem a) const { return poly_->render(to_poly(a)); }
  Elem parse(std::string_view text) const { return from_poly(poly_->parse(text)); }
  std::string describe() const { return poly_->describe(); }

 private:
  explicit SmallField(std::shared_ptr<const Field> poly);
  Elem add_digits(Elem a, Elem b) const;
  Elem neg_digits(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;

  std::shared_ptr<const Field> poly_;
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  // exp_ has length 2(q-1) so that log sums index it without reduction.
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  // Addition and negation tables for small non-prime odd-characteristic fields.
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_table_;
};

/// Embedding of the canonical GF(q) (a SmallField) into the base subfield of a
/// splitting field with the same p and k.
class BaseEmbedding {
 public:
  BaseEmbedding(std::shared_ptr<const SmallField> base, std::shared_ptr<const Field> big);

  FieldElem to_big(SmallField::Elem a) const;
  /// nullopt when the element does not lie in the image of GF(q).
  std::optional<SmallField::Elem> from_big(const FieldElem& a) const;

  const SmallField& base() const { return *base_; }
  const Field& big() const { return *big_; }

 private:
  std::shared_ptr<const SmallField> base_;
  std::shared_ptr<const Field> big_;
  // powers_[j] = image of g^j, j < k.
  std::vector<FieldElem> powers_;
  // Reduced system for recovering base coordinates: pivot coordinate per row.
  std::vector<std::vector<Coeff>> reduced_;
  std::vector<std::vector<Coeff>> transform_;
  std::vector<unsigned> pivots_;
};

}  // namespace starclean::gf
