#pragma once

#include <optional>
#include <string>
#include <vector>

#include "szeta/common.hpp"

namespace szeta {

// Coefficients a_0..a_N of zeta(z) = exp(sum_n |F_n| z^n / n).
struct ZetaSeries {
  std::vector<BigInt> terms;
  std::uint32_t p = 0;    // metadata only
  std::string label;      // metadata only
  std::size_t order() const { return terms.empty() ? 0 : terms.size() - 1; }
};

inline constexpr std::size_t kDefaultZetaTerms = 200;

// counts[k] = |F_{k+1}|. Uses m a_m = sum_{k=1..m} |F_k| a_{m-k}; throws
// InvariantViolation if some a_m is not a non-negative integer.
ZetaSeries zeta_coefficients(const std::vector<BigInt>& counts);

// Inverse of zeta_coefficients: |F_m| = m a_m - sum_{k<m} |F_k| a_{m-k}.
std::vector<BigInt> counts_from_zeta(const ZetaSeries& series);

// Number of orbits of exact length n: n O_n = sum_{d|n} mu(n/d) |F_d|.
std::vector<BigInt> orbit_counts(const std::vector<BigInt>& counts);

/**
 * Shortest linear recurrence a_m = c_1 a_{m-1} + ... + c_L a_{m-L} with
 * rational coefficients that holds on every supplied term, found by
 * Berlekamp-Massey over Q. Returns the coefficients c_1..c_L if L <= max_order.
 *
 * A hit is consistent with a rational zeta function whose denominator has
 * degree <= L; it proves nothing. A miss is evidence against rationality.
 * Needs at least 2 * max_order + 2 terms.
 */
std::optional<std::vector<Rational>> find_linear_recurrence(const ZetaSeries& series, std::size_t max_order);

}  // namespace szeta
