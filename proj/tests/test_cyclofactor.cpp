#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "szeta/cyclofactor.hpp"
#include "szeta/numtheory.hpp"
#include "szeta/orders.hpp"

using namespace szeta;

namespace {
Poly P(std::uint64_t p, const char* text) { return parse_poly(PrimeField(p), text); }
}  // namespace

TEST_CASE("cyclotomic_poly examples") {
  for (unsigned p : {2u, 3u, 7u}) CHECK(cyclotomic_poly(PrimeField(p), 1) == parse_poly(PrimeField(p), "t-1"));
  CHECK(cyclotomic_poly(PrimeField(2), 5) == P(2, "t^4+t^3+t^2+t+1"));
  // Division oracle written out by hand.
  const Poly pi15 = cyclotomic_poly(PrimeField(2), 15);
  CHECK(pi15.degree() == 8);
  CHECK(pi15 * P(2, "t+1") * P(2, "t^2+t+1") * P(2, "t^4+t^3+t^2+t+1") == Poly::t_pow_minus_one(PrimeField(2), 15));
  CHECK_THROWS_AS(cyclotomic_poly(PrimeField(3), 6), InvalidInput);
}

TEST_CASE("deg pi_n = phi(n)") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (std::uint64_t n = 1; n <= 120; ++n) {
      if (n % p == 0) continue;
      CHECK(cyclotomic_poly(PrimeField(p), n).degree() == oracle::phi(n));
    }
  }
}

TEST_CASE("splitting_count examples") {
  const PrimeField f2(2);
  CHECK(splitting_count(f2, 7) == SplittingCount{2, 3});
  CHECK(splitting_count(f2, 5) == SplittingCount{1, 4});
  CHECK(splitting_count(f2, 15) == SplittingCount{2, 4});
  CHECK_THROWS_AS(splitting_count(f2, 6), InvalidInput);
  CHECK_THROWS_AS(splitting_count(f2, 1), InvalidInput);
}

TEST_CASE("splitting law matches a full factorization") {
  for (unsigned p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (std::uint64_t n = 2; n <= 60; ++n) {
      if (n % p == 0) continue;
      const auto split = splitting_count(f, n);
      auto fac = factorize(cyclotomic_poly(f, n));
      REQUIRE(fac.size() == split.count);
      for (auto& x : fac) {
        CHECK(x.multiplicity == 1);
        CHECK(x.poly.degree() == split.degree);
      }
      CHECK(cyclotomic_factors(f, n).size() == split.count);
      for (std::size_t i = 0; i < fac.size(); ++i) CHECK(cyclotomic_factors(f, n)[i] == fac[i].poly);
    }
  }
}

TEST_CASE("factor_tn_minus_1 examples") {
  const PrimeField f2(2);
  auto f15 = factor_tn_minus_1(f2, 15);
  REQUIRE(f15.parts.size() == 4);
  CHECK(f15.parts[0].d == 1);
  CHECK(f15.parts[0].factors == std::vector<Poly>{P(2, "t+1")});
  CHECK(f15.parts[1].factors == std::vector<Poly>{P(2, "t^2+t+1")});
  CHECK(f15.parts[2].factors == std::vector<Poly>{P(2, "t^4+t^3+t^2+t+1")});
  CHECK(f15.parts[3].d == 15);
  CHECK(f15.parts[3].factors == std::vector<Poly>{P(2, "t^4+t+1"), P(2, "t^4+t^3+1")});
  for (auto& part : f15.parts) CHECK(part.multiplicity == 1);

  auto f6 = factor_tn_minus_1(f2, 6);
  REQUIRE(f6.parts.size() == 2);
  CHECK(f6.parts[0].d == 1);
  CHECK(f6.parts[1].d == 3);
  for (auto& part : f6.parts) CHECK(part.multiplicity == 2);
  CHECK(reconstruct(f2, f6) == P(2, "t^6+1"));

  auto f1 = factor_tn_minus_1(PrimeField(5), 1);
  REQUIRE(f1.parts.size() == 1);
  CHECK(f1.parts[0].factors == std::vector<Poly>{P(5, "t-1")});
  CHECK(f1.parts[0].multiplicity == 1);
}

TEST_CASE("reconstruction and multiplicity structure for n <= 200") {
  for (unsigned p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (std::uint64_t n = 1; n <= 200; ++n) {
      auto fac = factor_tn_minus_1(f, n);
      REQUIRE(reconstruct(f, fac) == Poly::t_pow_minus_one(f, n));
      const auto split = split_prime_part(n, p);
      for (auto& part : fac.parts) {
        CHECK(part.multiplicity == split.prime_power);
        if (part.d >= 2) {
          const auto deg = multiplicative_order(p, part.d);
          CHECK(part.factors.size() * deg == oracle::phi(part.d));
          for (auto& g : part.factors) CHECK(g.degree() == deg);
        }
      }
    }
  }
}

TEST_CASE("memo tables are safe under concurrent use") {
  const PrimeField f(3);
  std::vector<std::vector<std::size_t>> seen(4);
  std::vector<std::thread> pool;
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t n = 301; n <= 340; ++n) {
        if (n % 3 == 0) continue;
        seen[w].push_back(cyclotomic_factors(f, n).size());
      }
    });
  }
  for (auto& t : pool) t.join();
  for (int w = 1; w < 4; ++w) CHECK(seen[w] == seen[0]);
}
