#pragma once

#include <cstdint>

#include "szeta/ffpoly.hpp"

namespace szeta {

// Least r >= 1 with a^r = 1 (mod m). Requires m >= 2 and gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

// Carmichael function lambda(m).
std::uint64_t carmichael_lambda(std::uint64_t m);

/**
 * Order of g: the least e >= 1 with g | t^e - 1. Defined for g(0) != 0 and
 * deg g >= 1.
 *
 * Irreducible v of degree m: the order of t in F_p[t]/(v), found by descending
 * from p^m - 1 through its prime factors. A power v^b has order
 * order(v) * p^d with p^d the least power of p that is >= b, and coprime parts
 * combine by lcm.
 */
BigInt poly_order(const Poly& g);

// Order of a monic irreducible v != t. Skips the factorization step.
BigInt irreducible_order(const Poly& v);

/**
 * Multiplicity of the irreducible v != t in t^n - 1.
 *
 * With n = n' p^e and p not dividing n', t^n - 1 = (t^n' - 1)^(p^e) and
 * t^n' - 1 is squarefree, so the answer is p^e when v | t^n' - 1 and 0
 * otherwise. v | t^n' - 1 is decided as t^n' = 1 mod v, which is the same
 * as order(v) | n'.
 */
std::uint64_t ord_in_tn_minus_1(const Poly& v, std::uint64_t n);

// Multiplicity of v in f by repeated exact division. Oracle for the above.
std::uint64_t ord_brute(const Poly& v, const Poly& f);

inline constexpr std::uint64_t kMaxPeriod = (1ULL << 31) - 1;

}  // namespace szeta
