#include "starclean/algebra.hpp"

#include <cctype>
#include <charconv>

#include "starclean/linalg.hpp"
#include "starclean/numtheory.hpp"

namespace starclean::algebra {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::int64_t parse_v(std::string_view text, std::string_view spec) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidInput("bad involution parameter in '" + std::string(spec) + "'");
  return v;
}

}  // namespace

Involution Involution::parse(std::string_view spec) {
  const std::string s = lower(trim(spec));
  if (s == "classical") return {InvolutionKind::Classical, -1};
  if (s == "identity") return {InvolutionKind::Identity, 1};
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw InvalidInput("unknown involution '" + std::string(spec) + "'");
  const std::string head(trim(std::string_view(s).substr(0, colon)));
  std::string_view rest = trim(std::string_view(s).substr(colon + 1));
  if (rest.substr(0, 2) != "v=") throw InvalidInput("expected v=<int> in '" + std::string(spec) + "'");
  const std::int64_t v = parse_v(rest.substr(2), spec);
  if (head == "sigma1") return {InvolutionKind::Sigma1, v};
  if (head == "sigma2") return {InvolutionKind::Sigma2, v};
  throw InvalidInput("unknown involution '" + std::string(spec) + "'");
}

std::string Involution::kind_name() const {
  switch (kind) {
    case InvolutionKind::Classical: return "classical";
    case InvolutionKind::Identity: return "identity";
    case InvolutionKind::Sigma1: return "sigma1";
    case InvolutionKind::Sigma2: return "sigma2";
  }
  return "?";
}

std::string Involution::spec() const {
  if (kind == InvolutionKind::Classical || kind == InvolutionKind::Identity) return kind_name();
  return kind_name() + ":v=" + std::to_string(v);
}

ResolvedInvolution resolve(const Involution& inv, const AbelianGroup& g, const gf::SmallField& f,
                           bool allow_identity) {
  const std::uint64_t n = g.exponent();
  ResolvedInvolution out;
  out.source = inv;
  switch (inv.kind) {
    case InvolutionKind::Identity:
      if (!allow_identity) throw InvalidInput("the identity map is not accepted as an involution here");
      out.v = numtheory::reduce(1, n);
      out.is_identity_map = true;
      return out;
    case InvolutionKind::Classical:
      out.v = numtheory::reduce(-1, n);
      out.is_identity_map = n <= 2;
      return out;
    case InvolutionKind::Sigma1: {
      const std::uint64_t v = numtheory::reduce(inv.v, n);
      if (numtheory::mul_mod(v, v, n) != 1 % n)
        throw InvalidInput("sigma1 needs v^2 = 1 mod " + std::to_string(n));
      if (v == 1 % n) throw InvalidInput("sigma1 needs v != 1 mod " + std::to_string(n));
      out.v = v;
      return out;
    }
    case InvolutionKind::Sigma2: {
      const std::uint64_t v = numtheory::reduce(inv.v, n);
      if (numtheory::mul_mod(v, v, n) != 1 % n)
        throw InvalidInput("sigma2 needs v^2 = 1 mod " + std::to_string(n));
      const auto root = f.sqrt_size();
      if (!root) throw InvalidInput("sigma2 needs a field of square order, got q = " + std::to_string(f.size()));
      out.v = v;
      out.coefficient_power = *root;
      return out;
    }
  }
  throw InvalidInput("unknown involution kind");
}

AlgebraElem involute(const Algebra& alg, const AlgebraElem& a, const ResolvedInvolution& inv) {
  if (inv.is_identity_map) return a;
  const auto& g = alg.group();
  const auto& f = alg.field();
  AlgebraElem r = alg.zero();
  if (a.coeffs.size() != r.coeffs.size()) throw InvalidInput("algebra element from a different context");
  const unsigned shift = inv.coefficient_power ? f.degree() / 2 : 0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    const auto c = shift ? f.frobenius(a.coeffs[i], shift) : a.coeffs[i];
    r.coeffs[g.power(i, static_cast<std::int64_t>(inv.v))] = c;
  }
  return r;
}

bool is_projection(const Algebra& alg, const AlgebraElem& a, const ResolvedInvolution& inv) {
  return involute(alg, a, inv) == a && alg.is_idempotent(a);
}

bool is_unit(const Algebra& alg, const AlgebraElem& a) {
  const std::size_t n = alg.dimension();
  linalg::Matrix m(n, n);
  // Row g holds the coefficients of a * g.
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (a.coeffs.at(h) != 0) m.at(g, alg.product(h, g)) = a.coeffs[h];
  return linalg::rank(alg.field(), std::move(m)) == n;
}

namespace {

bool complete_orthogonal(const Algebra& alg, std::span<const AlgebraElem> es) {
  AlgebraElem sum = alg.zero();
  for (std::size_t i = 0; i < es.size(); ++i) {
    sum = alg.add(sum, es[i]);
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (!alg.is_zero(alg.mul(es[i], es[j]))) return false;
  }
  return sum == alg.one();
}

}  // namespace

CleanDecomposition clean_decomposition(const Algebra& alg, const AlgebraElem& a,
                                       std::span<const AlgebraElem> primitives) {
  if (complete_orthogonal(alg, primitives)) {
    // Each e_i G is local, so a e_i or a e_i - e_i is a unit there, and the
    // least mask takes bit i only when a e_i is not.
    const AlgebraElem one = alg.one();
    AlgebraElem e = alg.zero();
    for (const auto& p : primitives) {
      const AlgebraElem rest = alg.sub(one, p);
      if (!is_unit(alg, alg.add(alg.mul(a, p), rest))) e = alg.add(e, p);
    }
    AlgebraElem u = alg.sub(a, e);
    if (!is_unit(alg, u)) throw ConsistencyError("no clean decomposition found");
    return {std::move(u), std::move(e)};
  }
  if (primitives.size() >= 63) throw LimitExceeded("too many idempotents to search");
  const std::uint64_t total = std::uint64_t{1} << primitives.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    AlgebraElem e = alg.zero();
    for (std::size_t i = 0; i < primitives.size(); ++i)
      if (mask >> i & 1) e = alg.add(e, primitives[i]);
    AlgebraElem u = alg.sub(a, e);
    if (is_unit(alg, u)) return {std::move(u), std::move(e)};
  }
  throw ConsistencyError("no clean decomposition found");
}

std::string render(const Algebra& alg, const AlgebraElem& a) {
  const auto& g = alg.group();
  const auto& f = alg.field();
  std::string out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    const auto c = a.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    const bool is_identity = i == g.identity();
    const std::string coeff = f.render(c);
    const bool compound = coeff.find_first_of(" +*") != std::string::npos;
    if (is_identity) {
      out += coeff;
    } else {
      if (c != 1) out += (compound ? "(" + coeff + ")" : coeff) + "*";
      out += g.render_element(i);
    }
  }
  return out.empty() ? "0" : out;
}

AlgebraElem parse(const Algebra& alg, std::string_view text) {
  const auto& g = alg.group();
  const auto& f = alg.field();
  AlgebraElem r = alg.zero();
  text = trim(text);
  if (text.empty()) throw InvalidInput("empty algebra element");
  // Split on top-level '+'; parenthesized coefficients may contain '+'.
  std::vector<std::string_view> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) throw InvalidInput("unbalanced parentheses in '" + std::string(text) + "'");
    if (text[i] == '+' && depth == 0) {
      terms.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw InvalidInput("unbalanced parentheses in '" + std::string(text) + "'");
  terms.push_back(trim(text.substr(start)));

  for (auto term : terms) {
    if (term.empty()) throw InvalidInput("empty term in '" + std::string(text) + "'");
    gf::SmallField::Elem coeff = f.one();
    std::string_view monomial = term;
    if (term.front() == '(') {
      const auto close = term.find(')');
      coeff = f.parse(term.substr(1, close - 1));
      monomial = trim(term.substr(close + 1));
      if (!monomial.empty()) {
        if (monomial.front() != '*') throw InvalidInput("expected '*' after coefficient in '" + std::string(term) + "'");
        monomial = trim(monomial.substr(1));
      }
    } else {
      // Factors before the first generator form the coefficient.
      std::size_t split = std::string_view::npos;
      for (std::size_t pos = 0; pos < term.size(); pos = term.find('*', pos) + 1) {
        const auto factor = trim(term.substr(pos));
        if (!factor.empty() && (factor.front() == 'x' || factor.front() == 'X')) {
          split = pos;
          break;
        }
        if (term.find('*', pos) == std::string_view::npos) break;
      }
      if (split != 0) {
        const auto head = split == std::string_view::npos ? term : term.substr(0, split);
        const auto star = head.rfind('*');
        coeff = f.parse(trim(split == std::string_view::npos ? head : head.substr(0, star)));
        monomial = split == std::string_view::npos ? std::string_view{} : trim(term.substr(split));
      }
    }
    const ElemIndex elem = monomial.empty() ? g.identity() : g.parse_element(monomial);
    r.coeffs[elem] = f.add(r.coeffs[elem], coeff);
  }
  return r;
}

}  // namespace starclean::algebra
