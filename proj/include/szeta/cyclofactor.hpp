#pragma once

#include <cstdint>
#include <vector>

#include "szeta/ffpoly.hpp"

namespace szeta {

// One cyclotomic block pi_d^(p^e) of t^n - 1, with pi_d split into irreducibles.
struct CycloPart {
  std::uint64_t d;
  std::vector<Poly> factors;  // monic irreducible, canonical order, equal degree
  std::uint64_t multiplicity;
};

struct CycloFactorization {
  std::uint64_t n;
  std::vector<CycloPart> parts;  // ascending d over the divisors of n'
};

// The n-th cyclotomic polynomial reduced mod p, p not dividing n. Computed by
// exact division of t^n - 1 by the pi_d for proper divisors d; memoized.
Poly cyclotomic_poly(PrimeField field, std::uint64_t n);

struct SplittingCount {
  std::uint64_t count;
  std::uint64_t degree;
  friend bool operator==(const SplittingCount&, const SplittingCount&) = default;
};

// pi_n splits into phi(n)/d irreducibles of degree d = ord_n(p). n >= 2.
SplittingCount splitting_count(PrimeField field, std::uint64_t n);

// Irreducible factors of pi_d, memoized.
const std::vector<Poly>& cyclotomic_factors(PrimeField field, std::uint64_t d);

CycloFactorization factor_tn_minus_1(PrimeField field, std::uint64_t n);

// Multiplies every part back together.
Poly reconstruct(PrimeField field, const CycloFactorization& fac);

}  // namespace szeta
