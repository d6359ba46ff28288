#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "szeta/common.hpp"

namespace szeta {

/**
 * The prime field F_p, 2 <= p < 2^31.
 *
 * Elements are plain residues in [0, p); the class only carries the modulus
 * and the scalar operations on residues.
 */
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint64_t p);

  Elem p() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  // Throws InvalidInput on zero.
  Elem inv(Elem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Elem p_;
};

/**
 * A polynomial over F_p in canonical form: coefficients low degree first,
 * every coefficient in [0, p), no trailing zero. The zero polynomial has no
 * coefficients and no degree.
 */
class Poly {
 public:
  using Elem = PrimeField::Elem;

  explicit Poly(PrimeField field) : field_(field) {}
  // Coefficients low to high; arbitrary integers are reduced mod p.
  Poly(PrimeField field, std::span<const std::int64_t> coeffs);
  Poly(PrimeField field, std::initializer_list<std::int64_t> coeffs);
  Poly(PrimeField field, std::vector<Elem> residues);

  static Poly constant(PrimeField field, std::int64_t c);
  static Poly monomial(PrimeField field, std::size_t degree, std::int64_t c = 1);
  // t^n - 1
  static Poly t_pow_minus_one(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  Elem p() const noexcept { return field_.p(); }
  std::span<const Elem> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // Throws InvalidInput for the zero polynomial.
  std::size_t degree() const;
  Elem leading() const;
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  // Coefficient of t^i, zero past the degree.
  Elem operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Poly monic() const;
  Elem eval(Elem x) const noexcept;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() noexcept;

  PrimeField field_;
  std::vector<Elem> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Poly::Elem c);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
// Quotient of an exact division; throws InvariantViolation on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

// Monic gcd. gcd(0, 0) is rejected.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& f);
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);
Poly poly_powmod(const Poly& base, const BigInt& exp, const Poly& modulus);
Poly poly_pow(const Poly& base, std::uint64_t exp);

bool is_irreducible(const Poly& f);

struct Factor {
  Poly poly;
  std::uint64_t multiplicity;
};

// Complete factorization into monic irreducibles, canonical order. The
// leading coefficient of f is dropped.
std::vector<Factor> factorize(const Poly& f);

// Split a monic squarefree f whose irreducible factors all have the given
// degree. Randomized, but draws from a fixed seed so output is reproducible.
std::vector<Poly> factorize_equal_degree(const Poly& f, std::size_t degree);

// Order by (degree, canonical code sum c_i p^i).
bool canonical_less(const Poly& a, const Poly& b);
BigInt canonical_code(const Poly& f);

// "t^3+t+1", "2*t^2+1", "0".
std::string to_string(const Poly& f);
std::vector<std::int64_t> to_coefficient_list(const Poly& f);

// Accepts "t^3+t+1" style (with '-', '*' and whitespace) or comma separated
// coefficients low to high ("1,1,0,1").
Poly parse_poly(PrimeField field, std::string_view text);

}  // namespace szeta
