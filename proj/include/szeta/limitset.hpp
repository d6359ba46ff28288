#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szeta/system.hpp"

namespace szeta {

// Growth rate (1/n) log|F_n| in units of log p: rate = e/n exactly.
struct GrowthPoint {
  std::uint64_t n;
  std::uint64_t e;
  Rational rate;
};

std::vector<GrowthPoint> growth_sequence(const SystemSpec& spec, std::uint64_t max_n);

// {1 - 1/q : 1 <= q <= q_bound, p does not divide q} together with 1, ascending.
std::vector<Rational> example85_reference(PrimeField field, std::uint64_t q_bound);

struct RateCluster {
  Rational representative;  // median member (lower median for even sizes)
  std::size_t support;
  Rational low;
  Rational high;
};

/**
 * Empirical limit points. Keeps the last ceil(tail_fraction * size) points,
 * sorts their rates, and links neighbours whose gap is <= epsilon. Clusters
 * come back ascending. This cannot certify membership in the limit set.
 */
std::vector<RateCluster> cluster_limits(const std::vector<GrowthPoint>& points, const Rational& epsilon,
                                        const Rational& tail_fraction);

// Primes q <= bound, q != p, with p a primitive root mod q.
std::vector<std::uint64_t> artin_primes(PrimeField field, std::uint64_t bound);

// Which fixed cyclotomic blocks (pi_1 and the factors of pi_q) the constructed
// omega marks. The default marks neither, so the fixed-factor constant is 1.
struct ConstructionOptions {
  bool mark_pi1 = false;
  bool mark_piq = false;
};

struct ConstructionCheck {
  std::string id;  // "pi_irreducible", "simple_multiplicity", ...
  std::string description;
  bool passed;
};

struct ConstructionReport {
  std::uint32_t p;
  std::uint64_t q;
  std::uint64_t nj;
  bool pi_irreducible;
  std::uint64_t multiplicity_in_qnj;        // fast multiplicity rule
  std::uint64_t multiplicity_brute;         // repeated division oracle
  std::uint64_t qnj_split_count;
  std::uint64_t qnj_min_factor_degree;
  std::uint64_t fixed_marked_degree;        // A = p^(-fixed_marked_degree)
  std::uint64_t e_qnj;
  std::int64_t b_exponent;                  // B_j = p^b_exponent
  Rational rate_gap;
  std::vector<ConstructionCheck> checks;

  bool passed() const;
  std::vector<std::string> failed_checks() const;
};

// Input that does not meet the construction's hypotheses.
class ConstructionRejected : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/**
 * Rebuilds the limit-point construction for primes p, q and an Artin prime
 * n_j for p with n_j > q: pi_{n_j} is irreducible, it divides t^{q n_j} - 1
 * exactly once, pi_{q n_j} splits into at most q-1 factors of degree at least
 * n_j - 1, and with omega marking only pi_{n_j} the period q n_j has
 * |F| = p^{(q-1) n_j} B_j with B_j = p. Failed identities are reported in
 * `checks`, not thrown.
 */
ConstructionReport verify_construction(std::uint64_t p, std::uint64_t q, std::uint64_t nj,
                                       ConstructionOptions options = {});

}  // namespace szeta
