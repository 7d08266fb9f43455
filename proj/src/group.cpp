#include "starclean/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "starclean/error.hpp"
#include "starclean/numtheory.hpp"

namespace starclean::group {

namespace {

std::string normalize_spec(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::uint64_t parse_number(std::string_view s, std::string_view context) {
  if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("malformed number in '" + std::string(context) + "'");
  return std::stoull(std::string(s));
}

// Integer partitions of n, each in non-increasing order.
void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
  order_ = 1;
  for (auto m : factors_) {
    if (order_ > kMaxGroupOrder / m) throw LimitExceeded("group order exceeds 2^20");
    order_ *= m;
  }
  strides_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * factors_[i];
}

AbelianGroup AbelianGroup::from_invariant_factors(std::vector<std::uint64_t> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw InvalidInput("invariant factors must exceed 1");
    if (i > 0 && factors[i] % factors[i - 1] != 0) throw InvalidInput("invariant factors must form a divisibility chain");
  }
  return AbelianGroup(std::move(factors));
}

AbelianGroup AbelianGroup::from_cyclic_factors(std::span<const std::uint64_t> orders) {
  std::map<std::uint64_t, std::vector<unsigned>> sylow;
  std::uint64_t total = 1;
  for (auto n : orders) {
    if (n == 0) throw InvalidInput("cyclic factor of order 0");
    if (total > kMaxGroupOrder / n) throw LimitExceeded("group order exceeds 2^20");
    total *= n;
    for (const auto& [p, e] : numtheory::factorize(n).factors) sylow[p].push_back(e);
  }
  std::size_t r = 0;
  for (auto& [p, exps] : sylow) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    r = std::max(r, exps.size());
  }
  // Largest factor collects the largest prime power of every prime, and so on.
  std::vector<std::uint64_t> factors(r, 1);
  for (const auto& [p, exps] : sylow)
    for (std::size_t i = 0; i < exps.size(); ++i) factors[r - 1 - i] *= numtheory::ipow(p, exps[i]);
  return AbelianGroup(std::move(factors));
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
  const std::string s = normalize_spec(spec);
  if (s.empty()) throw InvalidInput("empty group spec");
  std::vector<std::uint64_t> orders;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find('x', start);
    const std::string_view piece = std::string_view(s).substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (piece.size() < 2 || piece[0] != 'c') throw InvalidInput("malformed group spec '" + std::string(spec) + "'");
    const auto n = parse_number(piece.substr(1), spec);
    if (n == 0) throw InvalidInput("cyclic factor C0 in '" + std::string(spec) + "'");
    orders.push_back(n);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return from_cyclic_factors(orders);
}

std::vector<std::uint64_t> AbelianGroup::exponents(ElemIndex g) const {
  if (g >= order_) throw InvalidInput("group element index out of range");
  std::vector<std::uint64_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (g / strides_[i]) % factors_[i];
  return out;
}

ElemIndex AbelianGroup::index_of(std::span<const std::uint64_t> exps) const {
  if (exps.size() != factors_.size()) throw InvalidInput("exponent vector has the wrong length");
  ElemIndex g = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) g += (exps[i] % factors_[i]) * strides_[i];
  return g;
}

ElemIndex AbelianGroup::generator(std::size_t i) const {
  if (i >= factors_.size()) throw InvalidInput("generator index out of range");
  return strides_[i];
}

ElemIndex AbelianGroup::mul(ElemIndex a, ElemIndex b) const {
  ElemIndex g = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint64_t m = factors_[i];
    g += (((a / strides_[i]) % m + (b / strides_[i]) % m) % m) * strides_[i];
  }
  return g;
}

ElemIndex AbelianGroup::inverse(ElemIndex a) const {
  ElemIndex g = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint64_t m = factors_[i];
    g += ((m - (a / strides_[i]) % m) % m) * strides_[i];
  }
  return g;
}

ElemIndex AbelianGroup::power(ElemIndex a, std::int64_t v) const {
  ElemIndex g = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint64_t m = factors_[i];
    g += numtheory::mul_mod((a / strides_[i]) % m, numtheory::reduce(v, m), m) * strides_[i];
  }
  return g;
}

std::uint64_t AbelianGroup::element_order(ElemIndex a) const {
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint64_t m = factors_[i];
    ord = std::lcm(ord, m / std::gcd(m, (a / strides_[i]) % m));
  }
  return ord;
}

std::string AbelianGroup::name() const {
  if (factors_.empty()) return "C1";
  std::string out;
  for (auto m : factors_) {
    if (!out.empty()) out += 'x';
    out += "C" + std::to_string(m);
  }
  return out;
}

std::string AbelianGroup::render_element(ElemIndex g) const {
  const auto exps = exponents(g);
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

ElemIndex AbelianGroup::parse_element(std::string_view text) const {
  const std::string s = normalize_spec(text);
  if (s == "1") return identity();
  std::vector<std::uint64_t> exps(factors_.size(), 0);
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find('*', start), s.size());
    const std::string_view piece = std::string_view(s).substr(start, end - start);
    if (piece.size() < 2 || piece[0] != 'x') throw InvalidInput("malformed group element '" + std::string(text) + "'");
    const std::size_t caret = piece.find('^');
    const auto idx = parse_number(piece.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), text);
    const std::uint64_t e = caret == std::string_view::npos ? 1 : parse_number(piece.substr(caret + 1), text);
    if (idx == 0 || idx > factors_.size()) throw InvalidInput("unknown generator in '" + std::string(text) + "'");
    exps[idx - 1] = (exps[idx - 1] + e % factors_[idx - 1]) % factors_[idx - 1];
    start = end + 1;
  }
  return index_of(exps);
}

std::vector<AbelianGroup> groups_of_order(std::uint64_t n) {
  if (n == 0) throw InvalidInput("group order must be positive");
  std::vector<std::vector<std::uint64_t>> choices{{}};
  for (const auto& [p, e] : numtheory::factorize(n).factors) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& base : choices) {
      for (const auto& part : parts) {
        auto orders = base;
        for (unsigned x : part) orders.push_back(numtheory::ipow(p, x));
        next.push_back(std::move(orders));
      }
    }
    choices = std::move(next);
  }
  std::vector<AbelianGroup> out;
  out.reserve(choices.size());
  for (const auto& orders : choices) out.push_back(AbelianGroup::from_cyclic_factors(orders));
  std::sort(out.begin(), out.end(),
            [](const AbelianGroup& a, const AbelianGroup& b) { return a.invariant_factors() < b.invariant_factors(); });
  return out;
}

std::pair<ElemIndex, ElemIndex> SylowSplit::factor(ElemIndex g) const {
  // Componentwise CRT: the P coordinate is fixed mod p^a, the H coordinate mod m'.
  const auto exps = group.exponents(g);
  const auto& fs = group.invariant_factors();
  std::vector<std::uint64_t> pe, he;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::uint64_t pa = numtheory::ipow(p, numtheory::valuation(fs[i], p));
    const std::uint64_t mm = fs[i] / pa;
    // a = mm*y + pa*b: y = a * mm^{-1} mod pa, b = a * pa^{-1} mod mm.
    if (pa > 1) {
      const std::uint64_t inv = numtheory::pow_mod(mm % pa, numtheory::euler_phi(pa) - 1, pa);
      pe.push_back(numtheory::mul_mod(exps[i] % pa, inv, pa));
    }
    if (mm > 1) {
      const std::uint64_t inv = numtheory::pow_mod(pa % mm, numtheory::euler_phi(mm) - 1, mm);
      he.push_back(numtheory::mul_mod(exps[i] % mm, inv, mm));
    }
  }
  return {p_part.index_of(pe), coprime_part.index_of(he)};
}

SylowSplit sylow_split(const AbelianGroup& g, std::uint64_t p) {
  if (!numtheory::is_prime(p)) throw InvalidInput("sylow_split: " + std::to_string(p) + " is not prime");
  SylowSplit split;
  split.p = p;
  split.group = g;
  const auto& fs = g.invariant_factors();
  std::vector<std::uint64_t> pf, hf;
  std::vector<std::size_t> p_slots, h_slots;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::uint64_t pa = numtheory::ipow(p, numtheory::valuation(fs[i], p));
    if (pa > 1) {
      pf.push_back(pa);
      p_slots.push_back(i);
    }
    if (fs[i] / pa > 1) {
      hf.push_back(fs[i] / pa);
      h_slots.push_back(i);
    }
  }
  split.p_part = AbelianGroup::from_invariant_factors(pf);
  split.coprime_part = AbelianGroup::from_invariant_factors(hf);

  split.embed_p.resize(split.p_part.order());
  for (ElemIndex y = 0; y < split.p_part.order(); ++y) {
    const auto ye = split.p_part.exponents(y);
    std::vector<std::uint64_t> ge(fs.size(), 0);
    for (std::size_t j = 0; j < p_slots.size(); ++j) ge[p_slots[j]] = (fs[p_slots[j]] / pf[j]) * ye[j];
    split.embed_p[y] = g.index_of(ge);
  }
  split.embed_h.resize(split.coprime_part.order());
  for (ElemIndex b = 0; b < split.coprime_part.order(); ++b) {
    const auto be = split.coprime_part.exponents(b);
    std::vector<std::uint64_t> ge(fs.size(), 0);
    for (std::size_t j = 0; j < h_slots.size(); ++j) ge[h_slots[j]] = (fs[h_slots[j]] / hf[j]) * be[j];
    split.embed_h[b] = g.index_of(ge);
  }
  return split;
}

Character character_at(const AbelianGroup& h, ElemIndex index) { return Character{h.exponents(index)}; }

ElemIndex character_index(const AbelianGroup& h, const Character& psi) { return h.index_of(psi.exponents); }

std::uint64_t char_exponent(const AbelianGroup& h, const Character& psi, ElemIndex g) {
  const auto& fs = h.invariant_factors();
  if (psi.exponents.size() != fs.size()) throw InvalidInput("character belongs to a different group");
  const std::uint64_t m = h.exponent();
  const auto a = h.exponents(g);
  std::uint64_t e = 0;
  for (std::size_t j = 0; j < fs.size(); ++j)
    e = (e + numtheory::mul_mod((m / fs[j]) * psi.exponents[j] % m, a[j], m)) % m;
  return e;
}

std::uint64_t char_order(const AbelianGroup& h, const Character& psi) {
  const auto& fs = h.invariant_factors();
  std::uint64_t ord = 1;
  for (std::size_t j = 0; j < fs.size(); ++j) ord = std::lcm(ord, fs[j] / std::gcd(fs[j], psi.exponents[j] % fs[j]));
  return ord;
}

Character char_power(const AbelianGroup& h, const Character& psi, std::int64_t k) {
  const auto& fs = h.invariant_factors();
  Character out;
  out.exponents.resize(fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j)
    out.exponents[j] = numtheory::mul_mod(psi.exponents[j] % fs[j], numtheory::reduce(k, fs[j]), fs[j]);
  return out;
}

CharacterTable::CharacterTable(AbelianGroup h, std::shared_ptr<const gf::Field> field)
    : h_(std::move(h)), field_(std::move(field)), m_(h_.exponent()) {
  if (h_.order() % field_->characteristic() == 0)
    throw InvalidInput("characteristic divides |H|; characters need a coprime group");
  const gf::FieldElem omega = field_->root_of_unity(m_);
  omega_powers_.reserve(m_);
  gf::FieldElem x = field_->one();
  for (std::uint64_t j = 0; j < m_; ++j) {
    omega_powers_.push_back(x);
    x = field_->mul(x, omega);
  }
}

std::vector<Character> CharacterTable::characters() const {
  std::vector<Character> out;
  out.reserve(size());
  for (ElemIndex i = 0; i < h_.order(); ++i) out.push_back(character_at(h_, i));
  return out;
}

gf::FieldElem CharacterTable::value(const Character& psi, ElemIndex g) const {
  return omega_powers_[char_exponent(h_, psi, g)];
}

}  // namespace starclean::group
