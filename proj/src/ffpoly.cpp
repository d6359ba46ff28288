#include "szeta/ffpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

#include "szeta/numtheory.hpp"

namespace szeta {

namespace {

using u64 = std::uint64_t;
using Elem = Poly::Elem;

// Fixed seed for equal-degree splitting so factorize is reproducible.
constexpr u64 kSplitSeed = 0x5eed'c0de'2a17'0001ULL;

void require_same_field(const Poly& a, const Poly& b, const char* op) {
  if (!(a.field() == b.field())) {
    throw InvalidInput(std::string(op) + ": operands over different fields (p=" +
                       std::to_string(a.p()) + " vs p=" + std::to_string(b.p()) + ")");
  }
}

// Schoolbook product with lazy reduction. For p < 2^16 every partial product
// is below 2^32, so a 64-bit accumulator cannot overflow at any realistic
// length; larger p folds the accumulator once it passes 2^63.
std::vector<Elem> multiply_raw(std::span<const Elem> a, std::span<const Elem> b, Elem p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> acc(a.size() + b.size() - 1, 0);
  if (p < (1U << 16)) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const u64 ai = a[i];
      if (ai == 0) continue;
      u64* row = acc.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
    }
  } else {
    constexpr u64 kFold = 1ULL << 63;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const u64 ai = a[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        u64& slot = acc[i + j];
        slot += ai * b[j];
        if (slot >= kFold) slot %= p;
      }
    }
  }
  std::vector<Elem> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<Elem>(acc[k] % p);
  return out;
}

Poly random_poly(PrimeField field, std::size_t max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, field.p() - 1);
  std::vector<Elem> c(max_degree);
  for (auto& x : c) x = dist(rng);
  return Poly(field, std::move(c));
}

Poly t_poly(PrimeField field) { return Poly::monomial(field, 1); }

// p-th root of a polynomial whose derivative vanishes: f(t) = g(t^p) = g(t)^p.
Poly pth_root(const Poly& f) {
  const std::size_t p = f.p();
  std::vector<Elem> c;
  auto coeffs = f.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); i += p) c.push_back(coeffs[i]);
  return Poly(f.field(), std::move(c));
}

// (g, multiplicity) pairs with each g squarefree and monic.
void squarefree_decompose(const Poly& f, u64 scale_mult, std::vector<Factor>& out) {
  const PrimeField field = f.field();
  const Poly one = Poly::constant(field, 1);
  Poly c = poly_gcd(f, derivative(f));
  Poly w = exact_div(f, c);
  u64 i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, c);
    Poly fac = exact_div(w, y);
    if (!fac.is_constant()) out.push_back({fac.monic(), i * scale_mult});
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (!c.is_constant()) squarefree_decompose(pth_root(c), scale_mult * field.p(), out);
}

// Distinct-degree split of a monic squarefree g into (product of all degree-k
// factors, k) pairs.
std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly g) {
  std::vector<std::pair<Poly, std::size_t>> out;
  const PrimeField field = g.field();
  const Poly t = t_poly(field);
  Poly h = poly_mod(t, g);
  for (std::size_t k = 1; 2 * k <= g.degree(); ++k) {
    h = poly_powmod(h, field.p(), g);
    Poly gk = poly_gcd(g, h - t);
    if (!gk.is_one()) {
      out.emplace_back(gk, k);
      g = exact_div(g, gk);
      if (g.is_one()) break;
      h = poly_mod(h, g);
    }
  }
  if (!g.is_constant()) out.emplace_back(g, g.degree());
  return out;
}

// One attempt at a nontrivial split of f (all factors of the given degree).
Poly split_attempt(const Poly& f, std::size_t degree, std::mt19937_64& rng) {
  const PrimeField field = f.field();
  Poly a = random_poly(field, f.degree(), rng);
  if (a.is_constant()) return Poly::constant(field, 1);
  Poly g = poly_gcd(a, f);
  if (!g.is_one()) return g;
  Poly b(field);
  if (field.p() == 2) {
    // Absolute trace to F_2: a + a^2 + ... + a^(2^(degree-1)).
    Poly term = a;
    b = a;
    for (std::size_t i = 1; i < degree; ++i) {
      term = mulmod(term, term, f);
      b += term;
    }
  } else {
    BigInt e = (boost::multiprecision::pow(BigInt(field.p()), static_cast<unsigned>(degree)) - 1) / 2;
    b = poly_powmod(a, e, f) - Poly::constant(field, 1);
  }
  if (b.is_zero()) return Poly::constant(field, 1);
  return poly_gcd(b, f);
}

}  // namespace

// ---------------------------------------------------------------- PrimeField

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31) || !is_prime_u64(p)) {
    throw InvalidInput("PrimeField: p=" + std::to_string(p) + " is not a prime below 2^31");
  }
  p_ = static_cast<Elem>(p);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  return static_cast<Elem>(pow_mod_u64(a, e, p_));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw InvalidInput("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(PrimeField field, std::span<const std::int64_t> coeffs) : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(field_.reduce(c));
  trim();
}

Poly::Poly(PrimeField field, std::initializer_list<std::int64_t> coeffs)
    : Poly(field, std::span<const std::int64_t>(coeffs.begin(), coeffs.size())) {}

Poly::Poly(PrimeField field, std::vector<Elem> residues) : field_(field), coeffs_(std::move(residues)) {
  for (auto& c : coeffs_) c %= field_.p();
  trim();
}

Poly Poly::constant(PrimeField field, std::int64_t c) { return Poly(field, {c}); }

Poly Poly::monomial(PrimeField field, std::size_t degree, std::int64_t c) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = field.reduce(c);
  return Poly(field, std::move(v));
}

Poly Poly::t_pow_minus_one(PrimeField field, std::size_t n) {
  Poly f = monomial(field, n);
  f -= constant(field, 1);
  return f;
}

std::size_t Poly::degree() const {
  if (coeffs_.empty()) throw InvalidInput("degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

Poly::Elem Poly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scale(*this, field_.inv(coeffs_.back()));
}

Poly::Elem Poly::eval(Elem x) const noexcept {
  Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

void Poly::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_field(*this, rhs, "add");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_field(*this, rhs, "subtract");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  require_same_field(*this, rhs, "multiply");
  coeffs_ = multiply_raw(coeffs_, rhs.coeffs_, field_.p());
  trim();
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(const Poly& a) { return Poly(a.field()) - a; }
Poly operator*(const Poly& a, const Poly& b) {
  Poly r = a;
  r *= b;
  return r;
}

Poly scale(const Poly& a, Poly::Elem c) {
  std::vector<Elem> v(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : v) x = a.field().mul(x, c);
  return Poly(a.field(), std::move(v));
}

// ---------------------------------------------------------------- division

DivMod poly_divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b, "poly_divmod");
  if (b.is_zero()) throw InvalidInput("poly_divmod: division by the zero polynomial");
  const PrimeField field = a.field();
  if (a.is_zero() || a.degree() < b.degree()) return {Poly(field), a};

  const std::size_t db = b.degree();
  const auto bc = b.coeffs();
  const Elem lead_inv = field.inv(b.leading());
  const u64 p = field.p();
  std::vector<Elem> q(a.coeffs().size() - db, 0);
  if (p < (1U << 16)) {
    // Lazy reduction: each slot absorbs fewer than 2^32 updates below 2^32,
    // so only the slot becoming the leading term needs a reduction.
    std::vector<u64> acc(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = acc.size(); i-- > db;) {
      const Elem c = field.mul(static_cast<Elem>(acc[i] % p), lead_inv);
      q[i - db] = c;
      if (c == 0) continue;
      const u64 nc = p - c;
      u64* base = acc.data() + (i - db);
      for (std::size_t j = 0; j < db; ++j) base[j] += nc * bc[j];
    }
    std::vector<Elem> r(db);
    for (std::size_t j = 0; j < db; ++j) r[j] = static_cast<Elem>(acc[j] % p);
    return {Poly(field, std::move(q)), Poly(field, std::move(r))};
  }
  std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = r.size(); i-- > db;) {
    const Elem c = field.mul(r[i], lead_inv);
    q[i - db] = c;
    if (c == 0) continue;
    // r -= c * t^(i-db) * b, computed as r + (p - c) * b.
    const u64 nc = p - c;
    Elem* base = r.data() + (i - db);
    for (std::size_t j = 0; j < db; ++j) base[j] = static_cast<Elem>((base[j] + nc * bc[j]) % p);
    r[i] = 0;
  }
  r.resize(db);
  return {Poly(field, std::move(q)), Poly(field, std::move(r))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw InvariantViolation("exact_div: " + to_string(b) + " does not divide " + to_string(a));
  return q;
}

bool divides(const Poly& d, const Poly& a) { return poly_mod(a, d).is_zero(); }

Poly poly_gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b, "poly_gcd");
  if (a.is_zero() && b.is_zero()) throw InvalidInput("poly_gcd: both arguments are zero");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly derivative(const Poly& f) {
  if (f.is_constant()) return Poly(f.field());
  std::vector<Elem> c(f.degree());
  for (std::size_t i = 1; i <= f.degree(); ++i) c[i - 1] = f.field().mul(f[i], static_cast<Elem>(i % f.p()));
  return Poly(f.field(), std::move(c));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return poly_mod(a * b, modulus); }

Poly poly_powmod(const Poly& base, const BigInt& exp, const Poly& modulus) {
  require_same_field(base, modulus, "poly_powmod");
  if (modulus.is_zero()) throw InvalidInput("poly_powmod: zero modulus");
  if (modulus.is_constant()) throw InvalidInput("poly_powmod: modulus must have degree >= 1");
  if (exp < 0) throw InvalidInput("poly_powmod: negative exponent");
  Poly result = Poly::constant(base.field(), 1);
  if (exp == 0) return result;
  const Poly b = poly_mod(base, modulus);
  for (auto bit = static_cast<long>(boost::multiprecision::msb(exp)); bit >= 0; --bit) {
    result = mulmod(result, result, modulus);
    if (boost::multiprecision::bit_test(exp, static_cast<unsigned>(bit))) result = mulmod(result, b, modulus);
  }
  return result;
}

Poly poly_pow(const Poly& base, std::uint64_t exp) {
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

// ---------------------------------------------------------------- irreducibility

bool is_irreducible(const Poly& f_in) {
  if (f_in.is_constant()) throw InvalidInput("is_irreducible: input must have degree >= 1");
  const Poly f = f_in.monic();
  const std::size_t n = f.degree();
  if (n == 1) return true;
  const PrimeField field = f.field();
  const Poly t = t_poly(field);

  // frob[k] = t^(p^k) mod f, built by repeated p-th powering.
  std::vector<Poly> frob{poly_mod(t, f)};
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(poly_powmod(frob.back(), field.p(), f));
  if (!(frob[n] == poly_mod(t, f))) return false;
  for (auto& r : factor_u64(n)) {
    const Poly g = poly_gcd(f, frob[n / r.prime] - t);
    if (!g.is_one()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- factorization

std::vector<Poly> factorize_equal_degree(const Poly& f_in, std::size_t degree) {
  if (f_in.is_constant()) throw InvalidInput("factorize_equal_degree: input must have degree >= 1");
  const Poly f = f_in.monic();
  if (degree == 0 || f.degree() % degree != 0) {
    throw InvalidInput("factorize_equal_degree: degree " + std::to_string(degree) + " does not divide deg f");
  }
  std::mt19937_64 rng(kSplitSeed);
  std::vector<Poly> out, work{f};
  while (!work.empty()) {
    Poly g = std::move(work.back());
    work.pop_back();
    if (g.degree() == degree) {
      out.push_back(std::move(g));
      continue;
    }
    for (;;) {
      Poly d = split_attempt(g, degree, rng);
      if (!d.is_one() && d.degree() < g.degree()) {
        work.push_back(exact_div(g, d));
        work.push_back(std::move(d));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Factor> factorize(const Poly& f) {
  if (f.is_constant()) throw InvalidInput("factorize: input must have degree >= 1");
  std::vector<Factor> squarefree;
  squarefree_decompose(f.monic(), 1, squarefree);

  std::vector<Factor> out;
  for (auto& [g, mult] : squarefree) {
    for (auto& [block, k] : distinct_degree(g)) {
      for (auto& irr : factorize_equal_degree(block, k)) out.push_back({std::move(irr), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
  // Squarefree parts are pairwise coprime, so no factor repeats; merge anyway.
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  return merged;
}

// ---------------------------------------------------------------- ordering / text

bool canonical_less(const Poly& a, const Poly& b) {
  const auto ca = a.coeffs(), cb = b.coeffs();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

BigInt canonical_code(const Poly& f) {
  BigInt code = 0;
  const auto c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) code = code * f.p() + *it;
  return code;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.degree() + 1; i-- > 0;) {
    const Elem c = f[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::vector<std::int64_t> to_coefficient_list(const Poly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

Poly parse_poly(PrimeField field, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  auto fail = [&](const std::string& why) -> InvalidInput {
    return InvalidInput("malformed polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty");

  auto parse_uint = [&](std::size_t& pos) -> std::int64_t {
    const std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) throw fail("integer too large");
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    if (pos == start) throw fail("expected a number at position " + std::to_string(start));
    return v;
  };

  if (s.find(',') != std::string::npos) {
    std::vector<std::int64_t> coeffs;
    std::size_t pos = 0;
    for (;;) {
      bool neg = false;
      if (pos < s.size() && s[pos] == '-') {
        neg = true;
        ++pos;
      }
      const auto v = parse_uint(pos);
      coeffs.push_back(neg ? -v : v);
      if (pos == s.size()) break;
      if (s[pos] != ',') throw fail("unexpected '" + std::string(1, s[pos]) + "'");
      ++pos;
    }
    return Poly(field, std::span<const std::int64_t>(coeffs));
  }

  std::map<std::size_t, std::int64_t> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw fail("expected '+' or '-' at position " + std::to_string(pos));
    }
    if (pos >= s.size()) throw fail("dangling sign");
    std::int64_t coef = 1;
    std::size_t exp = 0;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = parse_uint(pos);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 't') throw fail("expected 't' after '*'");
      }
    }
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exp = static_cast<std::size_t>(parse_uint(pos));
        if (exp > (1U << 24)) throw fail("exponent too large");
      }
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      throw fail("unexpected '" + std::string(1, s[pos]) + "'");
    }
    terms[exp] += field.reduce(neg ? -coef : coef);
  }
  std::vector<std::int64_t> coeffs(terms.rbegin()->first + 1, 0);
  for (auto& [e, c] : terms) coeffs[e] = c;
  return Poly(field, std::span<const std::int64_t>(coeffs));
}

}  // namespace szeta
