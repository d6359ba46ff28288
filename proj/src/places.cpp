#include "szeta/places.hpp"

#include <algorithm>
#include <map>

namespace szeta {

Place Place::finite(const Poly& v) {
  if (v.is_constant() || !v.is_monic()) {
    throw InvalidInput("Place: " + to_string(v) + " is not a monic polynomial of degree >= 1");
  }
  if (!is_irreducible(v)) throw InvalidInput("Place: " + to_string(v) + " is not irreducible");
  return Place(v.field(), v);
}

const Poly& Place::poly() const {
  if (!poly_) throw InvalidInput("Place: the infinite place has no polynomial");
  return *poly_;
}

std::size_t Place::degree() const { return poly_ ? poly_->degree() : 1; }

std::vector<Poly> monic_irreducibles(PrimeField field, std::size_t degree) {
  if (degree == 0) throw InvalidInput("monic_irreducibles: degree must be >= 1");
  const std::uint64_t p = field.p();
  // Walk canonical codes p^degree .. 2*p^degree - 1 (the monic ones) in order.
  std::vector<Poly::Elem> digits(degree + 1, 0);
  digits[degree] = 1;
  std::vector<Poly> out;
  for (;;) {
    Poly f(field, digits);
    if (is_irreducible(f)) out.push_back(std::move(f));
    std::size_t i = 0;
    while (i < degree && digits[i] == p - 1) digits[i++] = 0;
    if (i == degree) break;
    ++digits[i];
  }
  return out;
}

std::vector<IndexedPlace> enumerate_places(PrimeField field, std::size_t max_degree) {
  if (max_degree == 0) throw InvalidInput("enumerate_places: max_degree must be >= 1");
  const Poly t = Poly::monomial(field, 1);
  std::vector<IndexedPlace> out;
  out.push_back({-1, Place::infinite(field)});
  out.push_back({0, Place::finite(t)});
  std::int64_t index = 1;
  for (std::size_t m = 1; m <= max_degree; ++m) {
    for (auto& v : monic_irreducibles(field, m)) {
      if (v == t) continue;
      out.push_back({index++, Place::finite(v)});
    }
  }
  return out;
}

std::uint64_t multiplicity_of(const Poly& v, Poly f) {
  if (v.is_constant()) throw InvalidInput("multiplicity_of: divisor must be nonconstant");
  if (f.is_zero()) throw InvalidInput("multiplicity_of: zero polynomial has infinite multiplicity");
  std::uint64_t k = 0;
  for (;;) {
    auto [q, r] = poly_divmod(f, v);
    if (!r.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

ValExponent valuation_exponent(const Place& place, const Poly& numerator, const Poly& denominator) {
  if (numerator.is_zero() || denominator.is_zero()) {
    throw InvalidInput("valuation_exponent: numerator and denominator must be nonzero");
  }
  if (place.is_infinite()) {
    return {static_cast<std::int64_t>(denominator.degree()) - static_cast<std::int64_t>(numerator.degree())};
  }
  const Poly& v = place.poly();
  const auto num = static_cast<std::int64_t>(multiplicity_of(v, numerator));
  const auto den = static_cast<std::int64_t>(multiplicity_of(v, denominator));
  return {(num - den) * static_cast<std::int64_t>(v.degree())};
}

std::int64_t product_formula_sum(const Poly& numerator, const Poly& denominator) {
  if (numerator.is_zero() || denominator.is_zero()) {
    throw InvalidInput("product_formula_sum: numerator and denominator must be nonzero");
  }
  const PrimeField field = numerator.field();
  std::vector<Poly> support;
  for (const Poly* f : {&numerator, &denominator}) {
    if (f->is_constant()) continue;
    for (auto& fac : factorize(*f)) support.push_back(fac.poly);
  }
  std::sort(support.begin(), support.end(), canonical_less);
  support.erase(std::unique(support.begin(), support.end()), support.end());

  std::int64_t sum = valuation_exponent(Place::infinite(field), numerator, denominator).e;
  for (auto& v : support) sum += valuation_exponent(Place::finite(v), numerator, denominator).e;
  return sum;
}

}  // namespace szeta
