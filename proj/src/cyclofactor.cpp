#include "szeta/cyclofactor.hpp"

#include <map>
#include <mutex>

#include "szeta/numtheory.hpp"
#include "szeta/orders.hpp"

namespace szeta {

namespace {

using Key = std::pair<std::uint32_t, std::uint64_t>;

// Shared memo tables; the mutex keeps concurrent callers safe. std::map nodes
// are stable, so references handed out stay valid.
struct Memo {
  std::mutex mu;
  std::map<Key, Poly> cyclo;
  std::map<Key, std::vector<Poly>> factors;
};

Memo& memo() {
  static Memo m;
  return m;
}

void require_coprime(PrimeField field, std::uint64_t n, const char* op) {
  if (n == 0) throw InvalidInput(std::string(op) + ": n must be positive");
  if (n % field.p() == 0) {
    throw InvalidInput(std::string(op) + ": p=" + std::to_string(field.p()) + " divides n=" + std::to_string(n));
  }
}

}  // namespace

Poly cyclotomic_poly(PrimeField field, std::uint64_t n) {
  require_coprime(field, n, "cyclotomic_poly");
  const Key key{field.p(), n};
  {
    std::lock_guard lock(memo().mu);
    if (auto it = memo().cyclo.find(key); it != memo().cyclo.end()) return it->second;
  }
  Poly f = Poly::t_pow_minus_one(field, n);
  for (auto d : divisors(n)) {
    if (d == n) break;
    f = exact_div(f, cyclotomic_poly(field, d));
  }
  std::lock_guard lock(memo().mu);
  return memo().cyclo.emplace(key, std::move(f)).first->second;
}

SplittingCount splitting_count(PrimeField field, std::uint64_t n) {
  require_coprime(field, n, "splitting_count");
  if (n < 2) throw InvalidInput("splitting_count: n must be >= 2");
  const std::uint64_t d = multiplicative_order(field.p(), n);
  return {euler_phi(n) / d, d};
}

const std::vector<Poly>& cyclotomic_factors(PrimeField field, std::uint64_t d) {
  require_coprime(field, d, "cyclotomic_factors");
  const Key key{field.p(), d};
  {
    std::lock_guard lock(memo().mu);
    if (auto it = memo().factors.find(key); it != memo().factors.end()) return it->second;
  }
  const Poly pi = cyclotomic_poly(field, d);
  std::vector<Poly> factors;
  if (d == 1) {
    factors.push_back(pi);
  } else {
    const auto split = splitting_count(field, d);
    if (split.count == 1) {
      factors.push_back(pi);
    } else {
      factors = factorize_equal_degree(pi, split.degree);
    }
  }
  std::lock_guard lock(memo().mu);
  return memo().factors.emplace(key, std::move(factors)).first->second;
}

CycloFactorization factor_tn_minus_1(PrimeField field, std::uint64_t n) {
  if (n == 0) throw InvalidInput("factor_tn_minus_1: n must be positive");
  const auto split = split_prime_part(n, field.p());
  CycloFactorization out{n, {}};
  for (auto d : divisors(split.coprime)) {
    out.parts.push_back({d, cyclotomic_factors(field, d), split.prime_power});
  }
  return out;
}

Poly reconstruct(PrimeField field, const CycloFactorization& fac) {
  Poly product = Poly::constant(field, 1);
  for (auto& part : fac.parts) {
    Poly block = Poly::constant(field, 1);
    for (auto& f : part.factors) block *= f;
    product *= poly_pow(block, part.multiplicity);
  }
  return product;
}

}  // namespace szeta
