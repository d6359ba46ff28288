#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "szeta/ffpoly.hpp"

namespace szeta {

/**
 * A place of K = F_p(t): either the infinite place or the place attached to
 * a monic irreducible polynomial v.
 *
 * Normalization: |f|_v = p^(-ord_v(f) * deg v) at a finite place and
 * |f|_inf = p^(deg f) for a polynomial f. With these choices the valuation
 * exponents of any nonzero f sum to zero.
 */
class Place {
 public:
  static Place infinite(PrimeField field) { return Place(field); }
  // Validates that v is monic and irreducible.
  static Place finite(const Poly& v);

  bool is_infinite() const noexcept { return !poly_.has_value(); }
  // Throws InvalidInput for the infinite place.
  const Poly& poly() const;
  const PrimeField& field() const noexcept { return field_; }
  // Degree of the place; the infinite place has degree 1.
  std::size_t degree() const;

  friend bool operator==(const Place& a, const Place& b) = default;

 private:
  explicit Place(PrimeField field) : field_(field) {}
  Place(PrimeField field, Poly v) : field_(field), poly_(std::move(v)) {}

  PrimeField field_;
  std::optional<Poly> poly_;
};

// |f|_place = p^(-e).
struct ValExponent {
  std::int64_t e;
  friend bool operator==(const ValExponent&, const ValExponent&) = default;
};

struct IndexedPlace {
  std::int64_t index;  // -1 for infinity, 0 for t, 1, 2, ... afterwards
  Place place;
};

// [inf, t, then every other monic irreducible of degree <= max_degree], the
// finite places sorted by (degree, canonical code).
std::vector<IndexedPlace> enumerate_places(PrimeField field, std::size_t max_degree);

// All monic irreducibles of exactly the given degree, canonical order.
std::vector<Poly> monic_irreducibles(PrimeField field, std::size_t degree);

// Multiplicity of v in f by repeated exact division.
std::uint64_t multiplicity_of(const Poly& v, Poly f);

ValExponent valuation_exponent(const Place& place, const Poly& numerator, const Poly& denominator);

// Sum of valuation exponents of num/den over infinity and every finite place
// dividing num or den. Zero for every valid input.
std::int64_t product_formula_sum(const Poly& numerator, const Poly& denominator);

}  // namespace szeta
