#include "szeta/orders.hpp"

#include <numeric>

#include "szeta/numtheory.hpp"
#include "szeta/places.hpp"

namespace szeta {

std::uint64_t carmichael_lambda(std::uint64_t m) {
  if (m == 0) throw InvalidInput("carmichael_lambda: m must be positive");
  std::uint64_t lam = 1;
  for (auto& [q, k] : factor_u64(m)) {
    std::uint64_t pk = 1;
    for (unsigned i = 1; i < k; ++i) pk *= q;
    std::uint64_t part = pk * (q - 1);
    if (q == 2 && k >= 3) part /= 2;
    lam = std::lcm(lam, part);
  }
  return lam;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw InvalidInput("multiplicative_order: modulus must be >= 2");
  if (std::gcd(a % m, m) != 1) {
    throw InvalidInput("multiplicative_order: gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
  }
  std::uint64_t r = carmichael_lambda(m);
  for (auto& [q, k] : factor_u64(r)) {
    for (unsigned i = 0; i < k && r % q == 0; ++i) {
      if (pow_mod_u64(a, r / q, m) != 1) break;
      r /= q;
    }
  }
  return r;
}

BigInt irreducible_order(const Poly& v) {
  const PrimeField field = v.field();
  const Poly t = Poly::monomial(field, 1);
  if (v == t) throw InvalidInput("irreducible_order: t has no order");
  const BigInt group = boost::multiprecision::pow(BigInt(field.p()), static_cast<unsigned>(v.degree())) - 1;
  BigInt e = group;
  for (auto& [q, k] : factor_integer(group)) {
    for (unsigned i = 0; i < k; ++i) {
      if (!poly_powmod(t, e / q, v).is_one()) break;
      e /= q;
    }
  }
  return e;
}

BigInt poly_order(const Poly& g) {
  if (g.is_zero() || g.is_constant()) throw InvalidInput("poly_order: g must have degree >= 1");
  if (g[0] == 0) throw InvalidInput("poly_order: g(0) = 0, so g divides no t^e - 1");
  BigInt order = 1;
  const std::uint64_t p = g.p();
  for (auto& [v, b] : factorize(g)) {
    BigInt pd = 1;
    while (pd < b) pd *= p;
    order = lcm(order, irreducible_order(v) * pd);
  }
  return order;
}

std::uint64_t ord_in_tn_minus_1(const Poly& v, std::uint64_t n) {
  if (n == 0 || n > kMaxPeriod) throw InvalidInput("ord_in_tn_minus_1: n must lie in [1, 2^31-1]");
  if (v.is_constant() || !v.is_monic()) throw InvalidInput("ord_in_tn_minus_1: v must be monic of degree >= 1");
  if (v == Poly::monomial(v.field(), 1)) throw InvalidInput("ord_in_tn_minus_1: v = t never divides t^n - 1");
  if (!is_irreducible(v)) throw InvalidInput("ord_in_tn_minus_1: " + to_string(v) + " is not irreducible");
  const auto split = split_prime_part(n, v.p());
  const Poly t = Poly::monomial(v.field(), 1);
  return poly_powmod(t, split.coprime, v).is_one() ? split.prime_power : 0;
}

std::uint64_t ord_brute(const Poly& v, const Poly& f) { return multiplicity_of(v, f); }

}  // namespace szeta
