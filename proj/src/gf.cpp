#include "starclean/gf.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <sstream>
#include <tuple>

#include "starclean/error.hpp"
#include "starclean/numtheory.hpp"

namespace starclean::gf {

namespace {

using boost::multiprecision::cpp_int;
using Poly = std::vector<Coeff>;  // low degree first, trimmed

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 24;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
constexpr std::uint64_t kGeneratorLimit = std::uint64_t{1} << 40;

Coeff inv_mod(Coeff a, std::uint64_t p) {
  return static_cast<Coeff>(numtheory::pow_mod(a, p - 2, p));
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = static_cast<Coeff>((a[i] + p - b[i]) % p);
  trim(a);
  return a;
}

// Remainder of a modulo b (b nonzero).
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const int db = deg(b);
  const Coeff lead_inv = inv_mod(b.back(), p);
  while (deg(a) >= db) {
    const int shift = deg(a) - db;
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (int i = 0; i <= db; ++i) {
      auto& t = a[static_cast<std::size_t>(i + shift)];
      t = static_cast<Coeff>((t + p - c * b[static_cast<std::size_t>(i)] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  Poly out(prod.begin(), prod.end());
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e != 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree e is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= e/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const int e = deg(f);
  if (e <= 1) return e == 1;
  if (f[0] == 0) return false;
  if (p <= 64) {
    for (std::uint64_t r = 0; r < p; ++r) {
      std::uint64_t v = 0;
      for (int i = e; i >= 0; --i) v = (v * r + f[static_cast<std::size_t>(i)]) % p;
      if (v == 0) return false;
    }
  }
  const Poly x{0, 1};
  Poly u = x;
  for (int i = 1; i <= e / 2; ++i) {
    u = poly_powmod(u, p, f, p);
    const Poly g = poly_gcd(f, poly_sub(u, x, p), p);
    if (deg(g) > 0) return false;
  }
  return true;
}

// Least monic irreducible of degree e in the order of sum c_i p^i over the
// lower coefficients: an odometer over (c_0, ..., c_{e-1}) with c_0 fastest.
Poly least_irreducible(std::uint64_t p, unsigned e) {
  Poly f(e + 1, 0);
  f[e] = 1;
  while (true) {
    if (is_irreducible(f, p)) return f;
    unsigned i = 0;
    while (i < e && f[i] == p - 1) f[i++] = 0;
    if (i == e) throw ConsistencyError("no irreducible polynomial found");
    ++f[i];
  }
}

std::string render_poly(const std::vector<Coeff>& c, char var) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

std::uint64_t parse_uint(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw InvalidInput("expected a number in '" + s + "'");
  std::uint64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    if (v > (UINT64_MAX - 9) / 10) throw InvalidInput("number too large in '" + s + "'");
    v = v * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
  }
  return v;
}

cpp_int big_size(std::uint64_t p, unsigned e) {
  cpp_int n = 1;
  for (unsigned i = 0; i < e; ++i) n *= p;
  return n;
}

FieldElem pow_big(const Field& field, const FieldElem& a, const cpp_int& e) {
  FieldElem result = field.one();
  if (e == 0) return result;
  const std::size_t bits = boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = field.mul(result, result);
    if (boost::multiprecision::bit_test(e, i)) result = field.mul(result, a);
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------- Field

std::shared_ptr<const Field> Field::build(std::uint64_t p, unsigned k, unsigned d) {
  if (!numtheory::is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0 || d == 0) throw InvalidInput("field degrees must be positive");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k * d; ++i) {
    if (size > kMaxFieldSize / p) throw LimitExceeded("field size exceeds 2^24");
    size *= p;
  }
  return build_splitting(p, k, d);
}

std::shared_ptr<const Field> Field::build_splitting(std::uint64_t p, unsigned k, unsigned d) {
  if (!numtheory::is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) throw LimitExceeded("field characteristic exceeds 2^24");
  if (k == 0 || d == 0) throw InvalidInput("field degrees must be positive");
  if (static_cast<std::uint64_t>(k) * d > kMaxSplittingDegree)
    throw LimitExceeded("field degree " + std::to_string(std::uint64_t{k} * d) + " exceeds " +
                        std::to_string(kMaxSplittingDegree));

  static std::mutex registry_mutex;
  static std::map<std::tuple<std::uint64_t, unsigned, unsigned>, std::shared_ptr<const Field>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[{p, k, d}];
  if (!slot) slot = std::shared_ptr<const Field>(new Field(p, k, d));
  return slot;
}

Field::Field(std::uint64_t p, unsigned k, unsigned d) : p_(p), k_(k), d_(d), q_(numtheory::ipow(p, k)) {
  modulus_ = least_irreducible(p, k * d);
  const unsigned e = degree();
  // x^q, then its powers give the matrix of the q-power map.
  const Elem xq = pow(gen(), q_);
  frobenius_cols_.reserve(e);
  Elem col = one();
  for (unsigned j = 0; j < e; ++j) {
    frobenius_cols_.push_back(col.c);
    col = mul(col, xq);
  }
}

std::optional<std::uint64_t> Field::size() const {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < degree(); ++i) {
    if (n > UINT64_MAX / p_) return std::nullopt;
    n *= p_;
  }
  return n;
}

Field::Elem Field::one() const {
  Elem a = zero();
  a.c[0] = 1;
  return a;
}

Field::Elem Field::gen() const {
  Elem a = zero();
  if (degree() == 1) {
    // GF(p)[x]/(x): the class of x is the root of the modulus.
    a.c[0] = static_cast<Coeff>((p_ - modulus_[0]) % p_);
    return a;
  }
  a.c[1] = 1;
  return a;
}

Field::Elem Field::from_int(std::int64_t n) const {
  Elem a = zero();
  a.c[0] = static_cast<Coeff>(numtheory::reduce(n, p_));
  return a;
}

bool Field::is_zero(const Elem& a) const {
  return std::all_of(a.c.begin(), a.c.end(), [](Coeff x) { return x == 0; });
}

Field::Elem Field::add(const Elem& a, const Elem& b) const {
  if (a.c.size() != degree() || b.c.size() != degree()) throw InvalidInput("field element from a different context");
  Elem r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    const std::uint64_t s = std::uint64_t{r.c[i]} + b.c[i];
    r.c[i] = static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  return r;
}

Field::Elem Field::neg(const Elem& a) const {
  Elem r = a;
  for (auto& x : r.c) x = x == 0 ? 0 : static_cast<Coeff>(p_ - x);
  return r;
}

Field::Elem Field::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Field::Elem Field::mul(const Elem& a, const Elem& b) const {
  const std::size_t e = degree();
  if (a.c.size() != e || b.c.size() != e) throw InvalidInput("field element from a different context");
  // p < 2^24 and e <= 512 keep every accumulator below 2^58.
  std::vector<std::uint64_t> prod(2 * e - 1, 0);
  for (std::size_t i = 0; i < e; ++i) {
    const std::uint64_t ai = a.c[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < e; ++j) prod[i + j] += ai * b.c[j];
  }
  for (std::size_t i = 2 * e - 1; i-- > e;) {
    const std::uint64_t c = prod[i] % p_;
    if (c == 0) continue;
    const std::uint64_t nc = p_ - c;
    for (std::size_t j = 0; j < e; ++j) prod[i - e + j] += nc * modulus_[j];
  }
  Elem r;
  r.c.resize(e);
  for (std::size_t j = 0; j < e; ++j) r.c[j] = static_cast<Coeff>(prod[j] % p_);
  return r;
}

Field::Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw InvalidInput("inverse of zero");
  // Extended Euclid on (f, a), tracking the cofactor of a.
  Poly r0 = modulus_, r1(a.c.begin(), a.c.end());
  trim(r1);
  Poly s0{}, s1{1};
  while (deg(r1) > 0) {
    Poly q;
    Poly rem = r0;
    const int dr = deg(r1);
    const Coeff lead_inv = inv_mod(r1.back(), p_);
    q.assign(static_cast<std::size_t>(std::max(deg(rem) - dr + 1, 1)), 0);
    while (deg(rem) >= dr) {
      const int shift = deg(rem) - dr;
      const std::uint64_t c = std::uint64_t{rem.back()} * lead_inv % p_;
      q[static_cast<std::size_t>(shift)] = static_cast<Coeff>(c);
      for (int i = 0; i <= dr; ++i) {
        auto& t = rem[static_cast<std::size_t>(i + shift)];
        t = static_cast<Coeff>((t + p_ - c * r1[static_cast<std::size_t>(i)] % p_) % p_);
      }
      trim(rem);
    }
    trim(q);
    // s2 = s0 - q s1
    Poly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        qs[i + j] = static_cast<Coeff>((qs[i + j] + std::uint64_t{q[i]} * s1[j]) % p_);
    trim(qs);
    Poly s2 = poly_sub(s0, qs, p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant c; a * s1 = c.
  const std::uint64_t cinv = inv_mod(r1[0], p_);
  Elem r = zero();
  for (std::size_t i = 0; i < s1.size() && i < r.c.size(); ++i) r.c[i] = static_cast<Coeff>(s1[i] * cinv % p_);
  return r;
}

Field::Elem Field::pow(const Elem& a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

Field::Elem Field::apply_frobenius(const Elem& a) const {
  const std::size_t e = degree();
  std::vector<std::uint64_t> acc(e, 0);
  for (std::size_t j = 0; j < e; ++j) {
    const std::uint64_t aj = a.c[j];
    if (aj == 0) continue;
    const auto& col = frobenius_cols_[j];
    for (std::size_t i = 0; i < e; ++i) acc[i] += aj * col[i];
  }
  Elem r;
  r.c.resize(e);
  for (std::size_t i = 0; i < e; ++i) r.c[i] = static_cast<Coeff>(acc[i] % p_);
  return r;
}

Field::Elem Field::frobenius_base(const Elem& a) const {
  if (a.c.size() != degree()) throw InvalidInput("field element from a different context");
  return apply_frobenius(a);
}

Field::Elem Field::rel_trace(const Elem& a) const {
  Elem sum = a;
  Elem conj = a;
  for (unsigned i = 1; i < d_; ++i) {
    conj = frobenius_base(conj);
    sum = add(sum, conj);
  }
  return sum;
}

std::uint64_t Field::order_dividing(const Elem& a, std::uint64_t n) const {
  std::uint64_t t = n;
  for (const auto& [r, mult] : numtheory::factorize(n).factors) {
    for (unsigned i = 0; i < mult && pow(a, t / r) == one(); ++i) t /= r;
  }
  return t;
}

std::optional<Field::Elem> Field::least_generator() const {
  {
    std::lock_guard lock(cache_mutex_);
    if (generator_cache_) return *generator_cache_;
  }
  std::optional<Elem> found;
  const auto n = size();
  if (n && *n <= kGeneratorLimit) {
    const std::uint64_t order = *n - 1;
    const auto primes = numtheory::factorize(order).factors;
    for (std::uint64_t code = 1; code < *n; ++code) {
      const Elem a = from_code(code);
      const bool primitive = std::all_of(primes.begin(), primes.end(),
                                         [&](const auto& pr) { return pow(a, order / pr.first) != one(); });
      if (primitive) {
        found = a;
        break;
      }
    }
    if (!found) throw ConsistencyError("multiplicative group has no generator");
  }
  std::lock_guard lock(cache_mutex_);
  generator_cache_ = found;
  return found;
}

Field::Elem Field::root_of_unity(std::uint64_t m) const {
  if (m == 0) throw InvalidInput("root of unity order must be positive");
  if (numtheory::pow_mod(p_ % m, degree(), m) != 1 % m)
    throw InvalidInput("GF(" + std::to_string(p_) + "^" + std::to_string(degree()) + ") has no primitive " +
                       std::to_string(m) + "-th root of unity");
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = roots_cache_.find(m); it != roots_cache_.end()) return it->second;
  }
  Elem root = one();
  if (m > 1) {
    const cpp_int exponent = (big_size(p_, degree()) - 1) / m;
    if (auto g = least_generator()) {
      root = pow_big(*this, *g, exponent);
    } else {
      // Too large to factor |F| - 1: least a in code order whose power by
      // (|F| - 1)/m has exact order m.
      const auto primes = numtheory::factorize(m).factors;
      Elem a = one();
      bool done = false;
      while (!done) {
        unsigned i = 0;
        while (i < degree() && a.c[i] == p_ - 1) a.c[i++] = 0;
        if (i == degree()) throw ConsistencyError("no root of unity found");
        ++a.c[i];
        const Elem b = pow_big(*this, a, exponent);
        done = std::all_of(primes.begin(), primes.end(),
                           [&](const auto& pr) { return pow(b, m / pr.first) != one(); });
        if (done) root = b;
      }
    }
  }
  std::lock_guard lock(cache_mutex_);
  roots_cache_.emplace(m, root);
  return root;
}

std::uint64_t Field::to_code(const Elem& a) const {
  if (!size()) throw LimitExceeded("field too large for integer codes");
  std::uint64_t code = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) code = code * p_ + a.c[i];
  return code;
}

Field::Elem Field::from_code(std::uint64_t code) const {
  Elem a = zero();
  for (unsigned i = 0; i < degree(); ++i) {
    a.c[i] = static_cast<Coeff>(code % p_);
    code /= p_;
  }
  if (code != 0) throw InvalidInput("element code out of range");
  return a;
}

std::string Field::render(const Elem& a) const { return render_poly(a.c, 'g'); }

Field::Elem Field::parse(std::string_view text) const {
  const std::string s = strip(text);
  if (s.empty()) throw InvalidInput("empty field element");
  // Work with unreduced coefficients, then reduce modulo the defining polynomial.
  std::vector<std::uint64_t> coeffs;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw InvalidInput("malformed field element '" + s + "'");
    }
    first = false;
    std::uint64_t c = 1;
    unsigned power = 0;
    const bool has_number = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    if (has_number) {
      c = parse_uint(s, pos) % p_;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos < s.size() && s[pos] == 'g') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const auto pw = parse_uint(s, pos);
        if (pw > 4 * kMaxSplittingDegree) throw InvalidInput("exponent too large in '" + s + "'");
        power = static_cast<unsigned>(pw);
      }
    } else if (!has_number) {
      throw InvalidInput("malformed field element '" + s + "'");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
    coeffs[power] = (coeffs[power] + (negative ? (p_ - c) % p_ : c)) % p_;
  }
  Poly poly(coeffs.begin(), coeffs.end());
  if (degree() == 1) {
    // g denotes the root of the linear modulus.
    Elem r = zero();
    const std::uint64_t root = gen().c[0];
    std::uint64_t v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = (v * root + poly[i]) % p_;
    r.c[0] = static_cast<Coeff>(v);
    return r;
  }
  poly = poly_mod(std::move(poly), modulus_, p_);
  Elem r = zero();
  std::copy(poly.begin(), poly.end(), r.c.begin());
  return r;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (degree() > 1) os << '^' << degree();
  os << ") / " << render_poly(modulus_, 'x');
  return os.str();
}

// ---------------------------------------------------------------- SmallField

std::shared_ptr<const SmallField> SmallField::make(std::uint64_t q) {
  const auto pk = numtheory::prime_power(q);
  if (!pk) throw InvalidInput("field size " + std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldSize) throw LimitExceeded("field size " + std::to_string(q) + " exceeds 2^24");
  static std::mutex registry_mutex;
  static std::map<std::uint64_t, std::shared_ptr<const SmallField>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[q];
  if (!slot) slot = std::shared_ptr<const SmallField>(new SmallField(Field::build(pk->first, pk->second, 1)));
  return slot;
}

SmallField::SmallField(std::shared_ptr<const Field> poly)
    : poly_(std::move(poly)), p_(poly_->characteristic()), k_(poly_->degree()), q_(*poly_->size()) {
  if (q_ <= kTableLimit) {
    const auto g = poly_->least_generator();
    const std::size_t order = q_ - 1;
    exp_.resize(2 * order);
    log_.assign(q_, 0);
    FieldElem x = poly_->one();
    for (std::size_t i = 0; i < order; ++i) {
      const auto code = static_cast<Elem>(poly_->to_code(x));
      exp_[i] = exp_[i + order] = code;
      log_[code] = static_cast<std::uint32_t>(i);
      x = poly_->mul(x, *g);
    }
  }
  if (p_ != 2 && k_ > 1 && q_ <= 256) {
    add_table_.resize(q_ * q_);
    neg_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) {
        Elem r = 0, scale = 1, x = a, y = b;
        for (unsigned i = 0; i < k_; ++i) {
          r += static_cast<Elem>((x % p_ + y % p_) % p_) * scale;
          x /= static_cast<Elem>(p_);
          y /= static_cast<Elem>(p_);
          scale *= static_cast<Elem>(p_);
        }
        add_table_[a * q_ + b] = r;
        if (r == 0) neg_table_[a] = b;
      }
    }
  }
}

std::optional<std::uint64_t> SmallField::sqrt_size() const {
  if (k_ % 2 != 0) return std::nullopt;
  return numtheory::ipow(p_, k_ / 2);
}

SmallField::Elem SmallField::from_int(std::int64_t n) const { return static_cast<Elem>(numtheory::reduce(n, p_)); }

SmallField::Elem SmallField::add_digits(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += static_cast<Elem>((a % p_ + b % p_) % p_) * scale;
    a /= static_cast<Elem>(p_);
    b /= static_cast<Elem>(p_);
    scale *= static_cast<Elem>(p_);
  }
  return r;
}

SmallField::Elem SmallField::neg_digits(Elem a) const {
  if (!neg_table_.empty()) return neg_table_[a];
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += static_cast<Elem>((p_ - a % p_) % p_) * scale;
    a /= static_cast<Elem>(p_);
    scale *= static_cast<Elem>(p_);
  }
  return r;
}

SmallField::Elem SmallField::mul_slow(Elem a, Elem b) const {
  return static_cast<Elem>(poly_->to_code(poly_->mul(to_poly(a), to_poly(b))));
}

SmallField::Elem SmallField::inv(Elem a) const {
  if (a == 0) throw InvalidInput("inverse of zero");
  if (!log_.empty()) return exp_[(q_ - 1) - log_[a]];
  return static_cast<Elem>(poly_->to_code(poly_->inv(to_poly(a))));
}

SmallField::Elem SmallField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!log_.empty()) return exp_[numtheory::mul_mod(log_[a], e % (q_ - 1), q_ - 1)];
  return static_cast<Elem>(poly_->to_code(poly_->pow(to_poly(a), e)));
}

SmallField::Elem SmallField::frobenius(Elem a, unsigned j) const {
  for (unsigned i = 0; i < j; ++i) a = pow(a, p_);
  return a;
}

FieldElem SmallField::to_poly(Elem a) const { return poly_->from_code(a); }

SmallField::Elem SmallField::from_poly(const FieldElem& a) const {
  if (a.c.size() != k_) throw InvalidInput("field element from a different context");
  return static_cast<Elem>(poly_->to_code(a));
}

// ---------------------------------------------------------------- BaseEmbedding

BaseEmbedding::BaseEmbedding(std::shared_ptr<const SmallField> base, std::shared_ptr<const Field> big)
    : base_(std::move(base)), big_(std::move(big)) {
  const unsigned k = base_->degree();
  const std::uint64_t p = base_->characteristic();
  if (big_->characteristic() != p || big_->base_degree() != k)
    throw InvalidInput("splitting field does not extend the coefficient field");

  FieldElem root;
  if (k == 1) {
    root = big_->one();  // unused beyond powers_[0]
  } else if (big_->relative_degree() == 1) {
    root = big_->gen();  // both fields use the same defining polynomial
  } else {
    // The subfield GF(q) is {0} together with the powers of a (q-1)-th root of
    // unity; take the first power that is a root of the canonical modulus.
    const auto& f = base_->poly_field().modulus();
    const FieldElem beta = big_->root_of_unity(base_->size() - 1);
    FieldElem y = big_->one();
    bool found = false;
    for (std::uint64_t i = 0; i + 1 < base_->size(); ++i) {
      FieldElem v = big_->zero();
      for (std::size_t j = f.size(); j-- > 0;) v = big_->add(big_->mul(v, y), big_->from_int(f[j]));
      if (big_->is_zero(v)) {
        root = y;
        found = true;
        break;
      }
      y = big_->mul(y, beta);
    }
    if (!found) throw ConsistencyError("coefficient field modulus has no root in the splitting field");
  }
  powers_.push_back(big_->one());
  for (unsigned j = 1; j < k; ++j) powers_.push_back(big_->mul(powers_.back(), root));

  // Row-reduce the k x e coordinate matrix of powers_, tracking the combination.
  const unsigned e = big_->degree();
  reduced_.clear();
  for (unsigned j = 0; j < k; ++j) {
    std::vector<Coeff> row = powers_[j].c;
    std::vector<Coeff> comb(k, 0);
    comb[j] = 1;
    for (std::size_t r = 0; r < reduced_.size(); ++r) {
      const std::uint64_t c = row[pivots_[r]];
      if (c == 0) continue;
      for (unsigned i = 0; i < e; ++i) row[i] = static_cast<Coeff>((row[i] + (p - c) * reduced_[r][i]) % p);
      for (unsigned i = 0; i < k; ++i) comb[i] = static_cast<Coeff>((comb[i] + (p - c) * transform_[r][i]) % p);
    }
    unsigned piv = 0;
    while (piv < e && row[piv] == 0) ++piv;
    if (piv == e) throw ConsistencyError("embedded basis is linearly dependent");
    const std::uint64_t inv = inv_mod(row[piv], p);
    for (auto& x : row) x = static_cast<Coeff>(x * inv % p);
    for (auto& x : comb) x = static_cast<Coeff>(x * inv % p);
    // Clear the new pivot column from earlier rows.
    for (std::size_t r = 0; r < reduced_.size(); ++r) {
      const std::uint64_t c = reduced_[r][piv];
      if (c == 0) continue;
      for (unsigned i = 0; i < e; ++i)
        reduced_[r][i] = static_cast<Coeff>((reduced_[r][i] + (p - c) * row[i]) % p);
      for (unsigned i = 0; i < k; ++i)
        transform_[r][i] = static_cast<Coeff>((transform_[r][i] + (p - c) * comb[i]) % p);
    }
    reduced_.push_back(std::move(row));
    transform_.push_back(std::move(comb));
    pivots_.push_back(piv);
  }
}

FieldElem BaseEmbedding::to_big(SmallField::Elem a) const {
  const FieldElem poly = base_->to_poly(a);
  FieldElem r = big_->zero();
  for (std::size_t j = 0; j < poly.c.size(); ++j) {
    if (poly.c[j] == 0) continue;
    r = big_->add(r, big_->mul(big_->from_int(poly.c[j]), powers_[j]));
  }
  return r;
}

std::optional<SmallField::Elem> BaseEmbedding::from_big(const FieldElem& a) const {
  const std::uint64_t p = base_->characteristic();
  const unsigned e = big_->degree();
  const unsigned k = base_->degree();
  if (a.c.size() != e) throw InvalidInput("field element from a different context");
  std::vector<Coeff> residual = a.c;
  std::vector<Coeff> coords(k, 0);
  for (std::size_t r = 0; r < reduced_.size(); ++r) {
    const std::uint64_t c = residual[pivots_[r]];
    if (c == 0) continue;
    for (unsigned i = 0; i < e; ++i)
      residual[i] = static_cast<Coeff>((residual[i] + (p - c) * reduced_[r][i]) % p);
    for (unsigned i = 0; i < k; ++i) coords[i] = static_cast<Coeff>((coords[i] + c * transform_[r][i]) % p);
  }
  if (std::any_of(residual.begin(), residual.end(), [](Coeff x) { return x != 0; })) return std::nullopt;
  return base_->from_poly(FieldElem{coords});
}

}  // namespace starclean::gf
