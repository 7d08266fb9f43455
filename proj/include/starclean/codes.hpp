#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "starclean/algebra.hpp"
#include "starclean/idem.hpp"
#include "starclean/linalg.hpp"

// Abelian codes: ideals of GF(q) G as subspaces of GF(q)^|G|, coordinates in
// group element order.
namespace starclean::codes {

using algebra::Algebra;
using algebra::AlgebraElem;

struct AbelianCode {
  /// Indices into the primitive list whose ideals sum to this code.
  std::vector<std::size_t> classes;
  /// RREF basis.
  linalg::Matrix basis;

  std::size_t dimension() const { return basis.rows(); }
  std::size_t length() const { return basis.cols(); }
};

/// Ideal generated by e: row reduction of {e g : g in G}.
AbelianCode code_from_idempotent(const Algebra& alg, const AlgebraElem& e);
/// C_psi for the class at the given position. Requires gcd(char, |G|) = 1.
AbelianCode code_from_class(const Algebra& alg, const idem::PrimitiveSystem& sys, std::size_t cls);
/// Sum of the ideals of several classes.
AbelianCode code_from_classes(const Algebra& alg, const idem::PrimitiveSystem& sys, std::vector<std::size_t> classes);

gf::SmallField::Elem inner_product(const Algebra& alg, const AlgebraElem& a, const AlgebraElem& b);

AbelianCode dual_code(const Algebra& alg, const AbelianCode& c);

/// Position of the class containing psi^-1.
std::size_t inverse_class(const idem::PrimitiveSystem& sys, std::size_t cls);

/// The dual of C_psi equals the sum of all C_phi with phi outside the class of psi^-1.
bool dual_structure_check(const Algebra& alg, const idem::PrimitiveSystem& sys, std::size_t cls);

enum class CodeKind { LCD, SelfOrthogonal };

struct CodeClassification {
  CodeKind kind = CodeKind::LCD;
  std::uint64_t order = 1;
  std::size_t dimension = 0;
  /// Least t with q^t = -1 (mod order), when it exists.
  std::optional<std::uint64_t> witness_t;
  /// dim (C meet C^perp), from the rank of the Gram matrix.
  std::size_t hull_dimension = 0;
  bool lcd_linear = false;
  bool self_orthogonal_linear = false;

  bool agrees() const {
    return (kind == CodeKind::LCD) == lcd_linear && (kind == CodeKind::SelfOrthogonal) == self_orthogonal_linear;
  }
};

/// Number-theoretic verdict (psi ~ psi^-1) alongside the linear-algebra one.
/// Throws ConsistencyError when they disagree.
CodeClassification classify_code(const Algebra& alg, const idem::PrimitiveSystem& sys, std::size_t cls);

/// The four equivalent conditions for all codes of GF(q) G being LCD under the
/// classical involution, and the *-clean verdict they should match.
struct LcdEquivalenceReport {
  std::uint64_t n = 1;
  bool all_lcd = true;
  bool none_self_orthogonal = true;
  bool lcd_of_order_n = false;
  bool order_n_not_self_orthogonal = false;
  bool star_clean = false;
  std::optional<std::uint64_t> witness_t;
  /// n = 1, where the order-n conditions only see the trivial character.
  bool degenerate = false;
  std::vector<CodeClassification> classes;

  bool consistent() const {
    return all_lcd == none_self_orthogonal && all_lcd == lcd_of_order_n && all_lcd == order_n_not_self_orthogonal &&
           all_lcd == star_clean;
  }
};

LcdEquivalenceReport lcd_equivalence_report(const Algebra& alg, const idem::PrimitiveSystem& sys);

/// Minimum nonzero Hamming weight by exhaustive enumeration, when the code has
/// at most max_codewords words.
std::optional<std::uint64_t> min_distance(const Algebra& alg, const AbelianCode& c,
                                          std::uint64_t max_codewords = std::uint64_t{1} << 16);

/// Every basis row times every generator stays in the code.
bool is_ideal(const Algebra& alg, const AbelianCode& c);

}  // namespace starclean::codes
