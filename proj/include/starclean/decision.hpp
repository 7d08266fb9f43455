#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "starclean/algebra.hpp"
#include "starclean/idem.hpp"

// Deciding *-cleanness of GF(q) G: congruence criteria and the projection oracle.
namespace starclean::decision {

using algebra::AbelianGroup;
using algebra::Involution;
using algebra::ResolvedInvolution;

enum class Method { Criterion, Oracle, Both };
std::string method_name(Method m);

struct StarCleanReport {
  std::string group;
  std::string field;
  Involution involution;
  /// Normalized exponent actually applied, in [0, n).
  std::uint64_t v = 0;
  /// Exponent of the coprime part H.
  std::uint64_t m = 1;
  bool verdict = false;
  std::optional<std::uint64_t> witness_t;
  Method method = Method::Criterion;
  bool oracle_checked = false;
  std::optional<bool> oracle_verdict;
  /// Representative character index (in H) of a primitive idempotent that is not fixed.
  std::optional<std::uint64_t> counterexample_class;
  bool discrepancy = false;
  std::vector<std::string> notes;
};

/// q^t = v (mod m), m = exp of the q'-part. v must satisfy v^2 = 1, v != 1 mod exp(G).
StarCleanReport criterion_sigma1(std::uint64_t q, const AbelianGroup& g, std::int64_t v);
/// Coefficient field GF(field_size), field_size = q^2: (q^2)^t = q v (mod m).
StarCleanReport criterion_sigma2(std::uint64_t field_size, const AbelianGroup& g, std::int64_t v);
/// GF(2) with the classical involution, |G| odd: 2^t = -1 (mod exp(G)).
StarCleanReport criterion_f2_classical(const AbelianGroup& g);

/// Criterion matching the involution kind; classical uses v = -1 and is also
/// accepted when exp(G) <= 2.
StarCleanReport criterion(const gf::SmallField& f, const AbelianGroup& g, const Involution& inv);

/// Primitive idempotents of one algebra, reusable across involutions.
class OracleContext {
 public:
  explicit OracleContext(std::shared_ptr<const gf::SmallField> f, AbelianGroup g);

  const algebra::Algebra& algebra() const { return alg_; }
  const idem::PrimitiveSystem& system() const { return sys_; }

  struct Result {
    bool verdict = true;
    /// Index into system().primitives of the first non-fixed primitive.
    std::optional<std::size_t> failing;
    std::uint64_t subsets_checked = 0;
  };

  /// Every idempotent is a subset sum of primitives and the involution
  /// permutes primitives, so checking the primitives decides all idempotents.
  /// Paranoid mode also checks every subset sum (bounded by max_subsets).
  Result check(const ResolvedInvolution& inv, bool paranoid = false,
               std::uint64_t max_subsets = idem::kDefaultMaxSubsets) const;

  /// The involution maps the set of primitives onto itself.
  bool permutes_primitives(const ResolvedInvolution& inv) const;

 private:
  algebra::Algebra alg_;
  idem::PrimitiveSystem sys_;
};

struct AnalyzeOptions {
  bool oracle = true;
  bool paranoid = false;
  std::uint64_t max_subsets = idem::kDefaultMaxSubsets;
  /// Oracle is skipped (with a note) above this group order.
  std::uint64_t oracle_max_order = 1024;
};

/// Criterion, plus the oracle when enabled; discrepancy is set on disagreement.
StarCleanReport analyze(std::shared_ptr<const gf::SmallField> f, const AbelianGroup& g, const Involution& inv,
                        const AnalyzeOptions& opts = {});
/// Same, reusing a prepared oracle context for (f, g).
StarCleanReport analyze(const OracleContext& ctx, const Involution& inv, const AnalyzeOptions& opts = {});

struct Sigma1OnlyResult {
  bool value = false;
  std::string reason;
};

/// Whether every involution of GF(q) G is of the form sigma1 (identity
/// included): G = C_p with ord_p(q) = p - 1, or ord_p(q) = (p - 1)/2 and
/// p = 3 mod 4. Requires |G| odd and gcd(q, |G|) = 1.
Sigma1OnlyResult only_sigma1_involutions(std::uint64_t q, const AbelianGroup& g);

/// Involutions valid for G over f, in listing order: classical, then sigma1
/// for each v, then sigma2 for each v when f has square order.
std::vector<Involution> valid_involutions(const gf::SmallField& f, const AbelianGroup& g);

}  // namespace starclean::decision
