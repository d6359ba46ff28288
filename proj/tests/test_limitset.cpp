#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "szeta/limitset.hpp"
#include "szeta/numtheory.hpp"

using namespace szeta;

namespace {

Rational R(long long a, long long b) { return Rational(BigInt(a), BigInt(b)); }

std::vector<std::uint64_t> brute_artin(std::uint64_t p, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (q == p || !oracle::is_prime(q)) continue;
    if (oracle::mult_order(p, q) == q - 1) out.push_back(q);
  }
  return out;
}

}  // namespace

TEST_CASE("growth_sequence examples") {
  for (auto& g : growth_sequence(preset_system(PrimeField(5), "full"), 40)) CHECK(g.rate == 1);
  for (auto& g : growth_sequence(preset_system(PrimeField(5), "trivial"), 40)) CHECK(g.rate == 0);
  auto ex = growth_sequence(preset_system(PrimeField(3), "example85"), 6);
  CHECK(ex.back().n == 6);
  CHECK(ex.back().e == 3);
  CHECK(ex.back().rate == R(1, 2));
  CHECK_THROWS_AS(growth_sequence(preset_system(PrimeField(3), "full"), 0), InvalidInput);
}

TEST_CASE("growth points are exact rationals in [0, 1]") {
  const SystemSpec spec{PrimeField(2), random_marks(R(1, 2), 77), "r"};
  for (auto& g : growth_sequence(spec, 120)) {
    CHECK(g.rate * Rational(BigInt(g.n)) == Rational(BigInt(g.e)));
    CHECK(g.rate >= 0);
    CHECK(g.rate <= 1);
  }
}

TEST_CASE("example85_reference examples") {
  CHECK(example85_reference(PrimeField(3), 4) == std::vector<Rational>{0, R(1, 2), R(3, 4), 1});
  CHECK(example85_reference(PrimeField(2), 3) == std::vector<Rational>{0, R(2, 3), 1});
  CHECK(example85_reference(PrimeField(7), 1) == std::vector<Rational>{0, 1});
  CHECK_THROWS_AS(example85_reference(PrimeField(7), 0), InvalidInput);
}

TEST_CASE("example85 rates equal 1 - 1/n' for n <= 1000") {
  for (unsigned p : {2u, 3u}) {
    std::set<Rational> seen;
    for (auto& g : growth_sequence(preset_system(PrimeField(p), "example85"), 1000)) {
      const auto np = split_prime_part(g.n, p).coprime;
      REQUIRE(g.rate == 1 - R(1, static_cast<long long>(np)));
      seen.insert(g.rate);
    }
    // Rate 1 is approached (n' -> infinity) but never attained at finite n.
    auto ref = example85_reference(PrimeField(p), 1000);
    CHECK(seen.count(Rational(1)) == 0);
    seen.insert(Rational(1));
    CHECK(std::vector<Rational>(seen.begin(), seen.end()) == ref);
  }
}

TEST_CASE("cluster_limits examples") {
  auto full = cluster_limits(growth_sequence(preset_system(PrimeField(2), "full"), 100), R(1, 100), R(1, 2));
  REQUIRE(full.size() == 1);
  CHECK(full[0].representative == 1);
  CHECK(full[0].support == 50);

  auto triv = cluster_limits(growth_sequence(preset_system(PrimeField(2), "trivial"), 99), R(1, 100), R(1, 3));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].representative == 0);
  CHECK(triv[0].support == 33);

  auto ex = cluster_limits(growth_sequence(preset_system(PrimeField(3), "example85"), 2000), R(1, 100), Rational(1));
  REQUIRE(ex.size() >= 4);
  CHECK(ex[0].representative == 0);
  CHECK(ex[1].representative == R(1, 2));
  CHECK(ex[2].representative == R(3, 4));
  CHECK(ex.back().representative > R(99, 100));
  std::size_t total = 0;
  for (auto& c : ex) total += c.support;
  CHECK(total == 2000);

  CHECK_THROWS_AS(cluster_limits({}, R(1, 10), Rational(1)), InvalidInput);
  CHECK_THROWS_AS(cluster_limits(growth_sequence(preset_system(PrimeField(2), "full"), 3), Rational(0), Rational(1)), InvalidInput);
  CHECK_THROWS_AS(cluster_limits(growth_sequence(preset_system(PrimeField(2), "full"), 3), R(1, 10), R(3, 2)),
                  InvalidInput);
}

TEST_CASE("artin_primes examples") {
  CHECK(artin_primes(PrimeField(2), 30) == std::vector<std::uint64_t>{3, 5, 11, 13, 19, 29});
  CHECK(artin_primes(PrimeField(3), 20) == std::vector<std::uint64_t>{2, 5, 7, 17, 19});
  CHECK(artin_primes(PrimeField(3), 3) == std::vector<std::uint64_t>{2});
  CHECK_THROWS_AS(artin_primes(PrimeField(3), 2), InvalidInput);
  for (unsigned p : {2u, 3u, 5u, 7u}) CHECK(artin_primes(PrimeField(p), 600) == brute_artin(p, 600));
  CHECK(artin_primes(PrimeField(2), 1000).size() >= 60);
}

TEST_CASE("verify_construction examples") {
  auto r = verify_construction(2, 3, 5);
  CHECK(r.passed());
  CHECK(r.pi_irreducible);
  CHECK(r.multiplicity_in_qnj == 1);
  CHECK(r.multiplicity_brute == 1);
  CHECK(r.qnj_split_count == 2);
  CHECK(r.qnj_min_factor_degree == 4);
  CHECK(r.e_qnj == 11);
  CHECK(r.b_exponent == 1);
  CHECK(r.rate_gap == R(1, 15));

  CHECK_THROWS_AS(verify_construction(2, 3, 7), ConstructionRejected);

  auto r2 = verify_construction(3, 2, 5);
  CHECK(r2.passed());
  CHECK(r2.e_qnj == 6);
  CHECK(r2.b_exponent == 1);
  CHECK(r2.rate_gap == R(1, 10));
}

TEST_CASE("verify_construction rejects inputs outside its hypotheses") {
  CHECK_THROWS_AS(verify_construction(4, 3, 5), ConstructionRejected);
  CHECK_THROWS_AS(verify_construction(2, 2, 5), ConstructionRejected);
  CHECK_THROWS_AS(verify_construction(2, 4, 5), ConstructionRejected);
  CHECK_THROWS_AS(verify_construction(2, 5, 3), ConstructionRejected);
  CHECK_THROWS_AS(verify_construction(2, 3, 9), ConstructionRejected);
  CHECK_THROWS_AS(verify_construction(5, 3, 5), ConstructionRejected);
  CHECK_THROWS_AS(verify_construction(2, 3, 3), ConstructionRejected);
}

TEST_CASE("verify_construction over the first Artin primes for several q") {
  for (std::uint64_t q : {3u, 5u, 7u}) {
    std::vector<std::uint64_t> njs;
    for (auto nj : artin_primes(PrimeField(2), 200)) {
      if (nj > q && njs.size() < 5) njs.push_back(nj);
    }
    REQUIRE(njs.size() == 5);
    for (auto nj : njs) {
      auto r = verify_construction(2, q, nj);
      INFO("q=", q, " nj=", nj);
      CHECK(r.passed());
      CHECK(r.multiplicity_in_qnj == 1);
      CHECK(r.qnj_split_count <= q - 1);
      CHECK(r.qnj_min_factor_degree >= nj - 1);
      CHECK(r.b_exponent == 1);
      CHECK(r.rate_gap <= R(1, static_cast<long long>(nj)));
    }
  }
  for (std::uint64_t q : {2u, 5u}) {
    for (auto nj : artin_primes(PrimeField(3), 60)) {
      if (nj <= q) continue;
      CHECK(verify_construction(3, q, nj).passed());
    }
  }
}

TEST_CASE("verify_construction with marked fixed factors") {
  auto a = verify_construction(2, 3, 11, {.mark_pi1 = true});
  CHECK(a.passed());
  CHECK(a.fixed_marked_degree == 1);
  CHECK(a.b_exponent == 0);

  auto b = verify_construction(2, 5, 13, {.mark_pi1 = true, .mark_piq = true});
  CHECK(b.passed());
  CHECK(b.fixed_marked_degree == 5);
  CHECK(b.b_exponent == 1 - 5);
  CHECK(b.rate_gap <= R(1, 13));
}
