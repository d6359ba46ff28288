#include "szeta/zeta.hpp"

#include "szeta/numtheory.hpp"

namespace szeta {

ZetaSeries zeta_coefficients(const std::vector<BigInt>& counts) {
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] <= 0) {
      throw InvalidInput("zeta_coefficients: count |F_" + std::to_string(k + 1) + "| must be positive");
    }
  }
  ZetaSeries s;
  s.terms.reserve(counts.size() + 1);
  s.terms.push_back(1);
  for (std::size_t m = 1; m <= counts.size(); ++m) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= m; ++k) acc += counts[k - 1] * s.terms[m - k];
    BigInt q, r;
    boost::multiprecision::divide_qr(acc, BigInt(m), q, r);
    if (r != 0) {
      throw InvariantViolation("zeta_coefficients: a_" + std::to_string(m) + " = " + acc.str() + "/" +
                               std::to_string(m) + " is not an integer");
    }
    if (q < 0) throw InvariantViolation("zeta_coefficients: a_" + std::to_string(m) + " is negative");
    s.terms.push_back(std::move(q));
  }
  return s;
}

std::vector<BigInt> counts_from_zeta(const ZetaSeries& series) {
  if (series.terms.empty() || series.terms[0] != 1) throw InvalidInput("counts_from_zeta: a_0 must be 1");
  std::vector<BigInt> counts;
  for (std::size_t m = 1; m < series.terms.size(); ++m) {
    BigInt c = BigInt(m) * series.terms[m];
    for (std::size_t k = 1; k < m; ++k) c -= counts[k - 1] * series.terms[m - k];
    counts.push_back(std::move(c));
  }
  return counts;
}

std::vector<BigInt> orbit_counts(const std::vector<BigInt>& counts) {
  std::vector<BigInt> orbits;
  for (std::uint64_t n = 1; n <= counts.size(); ++n) {
    BigInt acc = 0;
    for (auto d : divisors(n)) {
      const int mu = mobius(n / d);
      if (mu != 0) acc += mu * counts[d - 1];
    }
    BigInt q, r;
    boost::multiprecision::divide_qr(acc, BigInt(n), q, r);
    if (r != 0) throw InvariantViolation("orbit_counts: O_" + std::to_string(n) + " is not an integer");
    if (q < 0) throw InvariantViolation("orbit_counts: O_" + std::to_string(n) + " is negative");
    orbits.push_back(std::move(q));
  }
  return orbits;
}

std::optional<std::vector<Rational>> find_linear_recurrence(const ZetaSeries& series, std::size_t max_order) {
  const auto& a = series.terms;
  if (max_order == 0) throw InvalidInput("find_linear_recurrence: max_order must be >= 1");
  if (a.size() < 2 * max_order + 2) {
    throw InvalidInput("find_linear_recurrence: need at least " + std::to_string(2 * max_order + 2) + " terms, got " +
                       std::to_string(a.size()));
  }
  // Connection polynomial C(x) = 1 + c_1 x + ... with sum_i C_i a_{m-i} = 0.
  std::vector<Rational> conn{1}, prev{1};
  std::size_t length = 0, shift = 1;
  Rational prev_disc = 1;
  for (std::size_t m = 0; m < a.size(); ++m) {
    Rational disc = 0;
    for (std::size_t i = 0; i <= length && i <= m && i < conn.size(); ++i) disc += conn[i] * Rational(a[m - i]);
    if (disc == 0) {
      ++shift;
      continue;
    }
    const Rational coef = disc / prev_disc;
    std::vector<Rational> next = conn;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift, Rational(0));
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + shift] -= coef * prev[i];
    if (2 * length <= m) {
      prev = conn;
      prev_disc = disc;
      length = m + 1 - length;
      shift = 1;
    } else {
      ++shift;
    }
    conn = std::move(next);
  }
  if (length > max_order) return std::nullopt;
  conn.resize(length + 1, Rational(0));
  std::vector<Rational> rec;
  for (std::size_t i = 1; i <= length; ++i) rec.push_back(-conn[i]);
  return rec;
}

}  // namespace szeta
