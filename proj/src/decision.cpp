#include "starclean/decision.hpp"

#include <map>
#include <numeric>

#include "starclean/error.hpp"
#include "starclean/numtheory.hpp"

namespace starclean::decision {

namespace {

std::uint64_t characteristic_of(std::uint64_t q) {
  const auto pk = numtheory::prime_power(q);
  if (!pk) throw InvalidInput(std::to_string(q) + " is not a prime power");
  return pk->first;
}

std::uint64_t coprime_exponent(const AbelianGroup& g, std::uint64_t p) {
  return group::sylow_split(g, p).coprime_part.exponent();
}

void check_square_root(std::uint64_t v, std::uint64_t n, const char* name) {
  if (numtheory::mul_mod(v, v, n) != 1 % n)
    throw InvalidInput(std::string(name) + " needs v^2 = 1 mod " + std::to_string(n));
}

StarCleanReport base_report(std::uint64_t q, const AbelianGroup& g, Involution inv) {
  StarCleanReport r;
  r.group = g.name();
  r.field = "GF(" + std::to_string(q) + ")";
  r.involution = inv;
  r.method = Method::Criterion;
  return r;
}

void settle(StarCleanReport& r, std::optional<std::uint64_t> t) {
  r.witness_t = t;
  r.verdict = t.has_value();
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Criterion: return "criterion";
    case Method::Oracle: return "oracle";
    case Method::Both: return "both";
  }
  return "?";
}

StarCleanReport criterion_sigma1(std::uint64_t q, const AbelianGroup& g, std::int64_t v) {
  const std::uint64_t p = characteristic_of(q);
  const std::uint64_t n = g.exponent();
  const std::uint64_t vn = numtheory::reduce(v, n);
  check_square_root(vn, n, "sigma1");
  if (vn == 1 % n) throw InvalidInput("sigma1 needs v != 1 mod " + std::to_string(n));
  auto r = base_report(q, g, {algebra::InvolutionKind::Sigma1, v});
  r.v = vn;
  r.m = coprime_exponent(g, p);
  settle(r, numtheory::solve_power_congruence(static_cast<std::int64_t>(q), v, r.m));
  return r;
}

StarCleanReport criterion_sigma2(std::uint64_t field_size, const AbelianGroup& g, std::int64_t v) {
  const auto pk = numtheory::prime_power(field_size);
  if (!pk) throw InvalidInput(std::to_string(field_size) + " is not a prime power");
  if (pk->second % 2 != 0) throw InvalidInput("sigma2 needs a field of square order, got q = " + std::to_string(field_size));
  const std::uint64_t q = numtheory::ipow(pk->first, pk->second / 2);
  const std::uint64_t n = g.exponent();
  const std::uint64_t vn = numtheory::reduce(v, n);
  check_square_root(vn, n, "sigma2");
  auto r = base_report(field_size, g, {algebra::InvolutionKind::Sigma2, v});
  r.v = vn;
  r.m = coprime_exponent(g, pk->first);
  const std::uint64_t target = numtheory::mul_mod(q % r.m, numtheory::reduce(v, r.m), r.m);
  settle(r, numtheory::solve_power_congruence(static_cast<std::int64_t>(field_size), static_cast<std::int64_t>(target), r.m));
  return r;
}

StarCleanReport criterion_f2_classical(const AbelianGroup& g) {
  if (g.order() % 2 == 0) throw InvalidInput("the GF(2) classical criterion needs a group of odd order");
  auto r = base_report(2, g, {algebra::InvolutionKind::Classical, -1});
  const std::uint64_t n = g.exponent();
  r.v = numtheory::reduce(-1, n);
  r.m = n;
  settle(r, numtheory::solve_power_congruence(2, -1, n));
  if (n == 1) r.notes.push_back("trivial group: degenerate case n = 1");
  return r;
}

StarCleanReport criterion(const gf::SmallField& f, const AbelianGroup& g, const Involution& inv) {
  switch (inv.kind) {
    case algebra::InvolutionKind::Sigma1: return criterion_sigma1(f.size(), g, inv.v);
    case algebra::InvolutionKind::Sigma2: return criterion_sigma2(f.size(), g, inv.v);
    case algebra::InvolutionKind::Identity:
      throw InvalidInput("the identity map is not accepted as an involution for analysis");
    case algebra::InvolutionKind::Classical: break;
  }
  const std::uint64_t n = g.exponent();
  if (n > 2) {
    auto r = criterion_sigma1(f.size(), g, -1);
    r.involution = inv;
    return r;
  }
  auto r = base_report(f.size(), g, inv);
  r.v = numtheory::reduce(-1, n);
  r.m = coprime_exponent(g, f.characteristic());
  settle(r, numtheory::solve_power_congruence(static_cast<std::int64_t>(f.size()), -1, r.m));
  r.notes.push_back(n == 1 ? "trivial group: degenerate case n = 1"
                           : "exponent 2: the classical involution is the identity map");
  return r;
}

OracleContext::OracleContext(std::shared_ptr<const gf::SmallField> f, AbelianGroup g)
    : alg_(std::move(g), std::move(f)), sys_(idem::primitive_idempotents(alg_)) {
  for (const auto& p : sys_.primitives)
    if (alg_.is_zero(p.element) || !alg_.is_idempotent(p.element))
      throw ConsistencyError("constructed primitive is not a nonzero idempotent");
}

OracleContext::Result OracleContext::check(const ResolvedInvolution& inv, bool paranoid,
                                           std::uint64_t max_subsets) const {
  Result res;
  // Idempotency of each primitive was verified at construction.
  for (std::size_t i = 0; i < sys_.primitives.size(); ++i) {
    const auto& e = sys_.primitives[i].element;
    if (algebra::involute(alg_, e, inv) != e) {
      res.verdict = false;
      res.failing = i;
      break;
    }
  }
  if (paranoid) {
    bool all = true;
    const auto elems = sys_.elements();
    idem::for_each_idempotent(
        alg_, elems,
        [&](const algebra::AlgebraElem& e) {
          ++res.subsets_checked;
          if (!algebra::is_projection(alg_, e, inv)) all = false;
        },
        max_subsets);
    if (all != res.verdict) throw ConsistencyError("subset-sum check disagrees with the primitive check");
  }
  return res;
}

bool OracleContext::permutes_primitives(const ResolvedInvolution& inv) const {
  std::map<std::vector<gf::SmallField::Elem>, std::size_t> index;
  for (std::size_t i = 0; i < sys_.primitives.size(); ++i) index.emplace(sys_.primitives[i].element.coeffs, i);
  std::vector<bool> hit(sys_.primitives.size(), false);
  for (const auto& p : sys_.primitives) {
    const auto it = index.find(algebra::involute(alg_, p.element, inv).coeffs);
    if (it == index.end() || hit[it->second]) return false;
    hit[it->second] = true;
  }
  return true;
}

StarCleanReport analyze(const OracleContext& ctx, const Involution& inv, const AnalyzeOptions& opts) {
  const auto& alg = ctx.algebra();
  const auto resolved = algebra::resolve(inv, alg.group(), alg.field());
  auto r = criterion(alg.field(), alg.group(), inv);
  if (!opts.oracle) return r;
  if (!ctx.permutes_primitives(resolved)) throw ConsistencyError("involution does not permute the primitive idempotents");
  const auto res = ctx.check(resolved, opts.paranoid, opts.max_subsets);
  r.oracle_checked = true;
  r.oracle_verdict = res.verdict;
  r.method = Method::Both;
  if (res.failing) r.counterexample_class = ctx.system().primitives[*res.failing].cls.representative;
  if (opts.paranoid) r.notes.push_back("paranoid: " + std::to_string(res.subsets_checked) + " idempotents checked");
  r.discrepancy = res.verdict != r.verdict;
  return r;
}

StarCleanReport analyze(std::shared_ptr<const gf::SmallField> f, const AbelianGroup& g, const Involution& inv,
                        const AnalyzeOptions& opts) {
  // Validates the involution before any heavy work.
  algebra::resolve(inv, g, *f);
  if (!opts.oracle) return criterion(*f, g, inv);
  const std::uint64_t m = coprime_exponent(g, f->characteristic());
  const std::uint64_t degree =
      m > 1 ? numtheory::mul_order(static_cast<std::int64_t>(f->size()), m) * f->degree() : f->degree();
  std::string skip;
  if (g.order() > opts.oracle_max_order)
    skip = "oracle skipped: |G| = " + std::to_string(g.order()) + " exceeds " + std::to_string(opts.oracle_max_order);
  else if (degree > gf::kMaxSplittingDegree)
    skip = "oracle skipped: splitting field degree exceeds " + std::to_string(gf::kMaxSplittingDegree);
  if (!skip.empty()) {
    auto r = criterion(*f, g, inv);
    r.notes.push_back(skip);
    return r;
  }
  const OracleContext ctx(std::move(f), g);
  return analyze(ctx, inv, opts);
}

Sigma1OnlyResult only_sigma1_involutions(std::uint64_t q, const AbelianGroup& g) {
  characteristic_of(q);
  if (g.order() % 2 == 0) throw InvalidInput("the sigma1 classification covers groups of odd order only");
  if (std::gcd(q, g.order()) != 1) throw InvalidInput("the sigma1 classification needs gcd(q, |G|) = 1");
  const auto& fs = g.invariant_factors();
  if (fs.size() != 1 || !numtheory::is_prime(fs[0])) return {false, "G is not cyclic of prime order"};
  const std::uint64_t p = fs[0];
  const std::uint64_t d = numtheory::mul_order(static_cast<std::int64_t>(q), p);
  const std::string ord = "ord_" + std::to_string(p) + "(" + std::to_string(q) + ") = " + std::to_string(d);
  if (d == p - 1) return {true, ord + " = p - 1"};
  if (2 * d == p - 1 && p % 4 == 3) return {true, ord + " = (p - 1)/2 and p = 3 mod 4"};
  if (2 * d == p - 1) return {false, ord + " = (p - 1)/2 but p = 1 mod 4"};
  return {false, ord + " is neither p - 1 nor (p - 1)/2"};
}

std::vector<Involution> valid_involutions(const gf::SmallField& f, const AbelianGroup& g) {
  const std::uint64_t n = g.exponent();
  std::vector<Involution> out{{algebra::InvolutionKind::Classical, -1}};
  const auto roots = numtheory::square_roots_of_unity(n);
  for (auto v : roots)
    if (v != 1 % n) out.push_back({algebra::InvolutionKind::Sigma1, static_cast<std::int64_t>(v)});
  if (f.sqrt_size())
    for (auto v : roots) out.push_back({algebra::InvolutionKind::Sigma2, static_cast<std::int64_t>(v)});
  return out;
}

}  // namespace starclean::decision
