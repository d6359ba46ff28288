#include "szeta/limitset.hpp"

#include <algorithm>
#include <set>

#include "szeta/cyclofactor.hpp"
#include "szeta/numtheory.hpp"
#include "szeta/orders.hpp"

namespace szeta {

std::vector<GrowthPoint> growth_sequence(const SystemSpec& spec, std::uint64_t max_n) {
  if (max_n == 0) throw InvalidInput("growth_sequence: max_n must be >= 1");
  std::vector<GrowthPoint> out;
  out.reserve(max_n);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const auto pe = periodic_exponent(spec, n);
    out.push_back({n, pe.e, Rational(BigInt(pe.e), BigInt(n))});
  }
  return out;
}

std::vector<Rational> example85_reference(PrimeField field, std::uint64_t q_bound) {
  if (q_bound == 0) throw InvalidInput("example85_reference: q_bound must be >= 1");
  std::set<Rational> rates{Rational(1)};
  for (std::uint64_t q = 1; q <= q_bound; ++q) {
    if (q % field.p() != 0) rates.insert(1 - Rational(BigInt(1), BigInt(q)));
  }
  return {rates.begin(), rates.end()};
}

std::vector<RateCluster> cluster_limits(const std::vector<GrowthPoint>& points, const Rational& epsilon,
                                        const Rational& tail_fraction) {
  if (epsilon <= 0) throw InvalidInput("cluster_limits: epsilon must be positive");
  if (tail_fraction <= 0 || tail_fraction > 1) throw InvalidInput("cluster_limits: tail_fraction must lie in (0, 1]");
  const Rational scaled = tail_fraction * Rational(BigInt(points.size()));
  BigInt keep = numerator(scaled) / denominator(scaled);
  if (keep * denominator(scaled) != numerator(scaled)) ++keep;
  const auto tail = static_cast<std::size_t>(keep);
  if (tail == 0) throw InvalidInput("cluster_limits: empty tail");

  std::vector<Rational> rates;
  for (auto it = points.end() - static_cast<std::ptrdiff_t>(tail); it != points.end(); ++it) rates.push_back(it->rate);
  std::sort(rates.begin(), rates.end());

  std::vector<RateCluster> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= rates.size(); ++i) {
    if (i == rates.size() || rates[i] - rates[i - 1] > epsilon) {
      const std::size_t size = i - start;
      out.push_back({rates[start + (size - 1) / 2], size, rates[start], rates[i - 1]});
      start = i;
    }
  }
  return out;
}

std::vector<std::uint64_t> artin_primes(PrimeField field, std::uint64_t bound) {
  if (bound < 3) throw InvalidInput("artin_primes: bound must be >= 3");
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (composite[q]) continue;
    for (std::uint64_t k = q * q; k <= bound; k += q) composite[k] = true;
    if (q == field.p()) continue;
    if (multiplicative_order(field.p(), q) == q - 1) out.push_back(q);
  }
  return out;
}

bool ConstructionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConstructionCheck& c) { return c.passed; });
}

std::vector<std::string> ConstructionReport::failed_checks() const {
  std::vector<std::string> out;
  for (auto& c : checks) {
    if (!c.passed) out.push_back(c.id + ": " + c.description);
  }
  return out;
}

ConstructionReport verify_construction(std::uint64_t p, std::uint64_t q, std::uint64_t nj,
                                       ConstructionOptions options) {
  auto reject = [&](const std::string& why) {
    return ConstructionRejected("verify_construction(p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                                ", nj=" + std::to_string(nj) + "): " + why);
  };
  if (p >= (1ULL << 31) || !is_prime_u64(p)) throw reject("p must be a prime below 2^31");
  if (!is_prime_u64(q)) throw reject("q must be prime");
  if (q == p) throw reject("q must differ from p");
  if (!is_prime_u64(nj)) throw reject("n_j must be prime");
  if (nj == p) throw reject("n_j must differ from p");
  if (nj <= q) throw reject("n_j must exceed q");
  if (q * nj > kMaxPeriod) throw reject("q * n_j exceeds 2^31-1");
  const auto ord = multiplicative_order(p, nj);
  if (ord != nj - 1) {
    throw reject("ord_" + std::to_string(nj) + "(" + std::to_string(p) + ") = " + std::to_string(ord) +
                 " != " + std::to_string(nj - 1) + "; n_j is not an Artin prime for p");
  }

  const PrimeField field(p);
  const std::uint64_t qnj = q * nj;
  ConstructionReport r{};
  r.p = field.p();
  r.q = q;
  r.nj = nj;
  auto check = [&](std::string id, std::string description, bool ok) {
    r.checks.push_back({std::move(id), std::move(description), ok});
  };

  // t^{n_j} - 1 = (t - 1) pi_{n_j} with pi_{n_j} = 1 + t + ... + t^{n_j - 1} irreducible.
  const Poly pi_nj = cyclotomic_poly(field, nj);
  const Poly repunit(field, std::vector<Poly::Elem>(nj, 1));
  r.pi_irreducible = is_irreducible(pi_nj);
  check("pi_irreducible", "pi_{n_j} = 1 + t + ... + t^{n_j-1} is irreducible and t^{n_j}-1 = (t-1) pi_{n_j}",
        r.pi_irreducible && pi_nj == repunit &&
            Poly(field, {-1, 1}) * pi_nj == Poly::t_pow_minus_one(field, nj));

  if (!r.pi_irreducible) {
    // Nothing downstream is defined without an irreducible pi_{n_j}.
    for (const char* id : {"simple_multiplicity", "cyclotomic_product", "split_bound", "fixed_factors", "count_bounds", "b_bounds", "rate_limit"}) {
      check(id, "not evaluated: pi_{n_j} is reducible", false);
    }
    return r;
  }

  // pi_{n_j} divides t^{q n_j} - 1 exactly once.
  r.multiplicity_in_qnj = ord_in_tn_minus_1(pi_nj, qnj);
  r.multiplicity_brute = ord_brute(pi_nj, Poly::t_pow_minus_one(field, qnj));
  check("simple_multiplicity", "pi_{n_j} has multiplicity exactly 1 in t^{q n_j}-1 (fast rule and repeated division agree)",
        r.multiplicity_in_qnj == 1 && r.multiplicity_brute == 1);

  // t^{q n_j} - 1 = pi_1 pi_q pi_{n_j} pi_{q n_j}.
  const Poly pi_1 = cyclotomic_poly(field, 1);
  const Poly pi_q = cyclotomic_poly(field, q);
  const Poly pi_qnj = cyclotomic_poly(field, qnj);
  check("cyclotomic_product", "t^{q n_j}-1 = pi_1 pi_q pi_{n_j} pi_{q n_j}",
        pi_1 * pi_q * pi_nj * pi_qnj == Poly::t_pow_minus_one(field, qnj));

  const auto& qnj_factors = cyclotomic_factors(field, qnj);
  r.qnj_split_count = qnj_factors.size();
  r.qnj_min_factor_degree = qnj_factors.front().degree();
  for (auto& f : qnj_factors) r.qnj_min_factor_degree = std::min<std::uint64_t>(r.qnj_min_factor_degree, f.degree());
  const auto split = splitting_count(field, qnj);
  Poly product = Poly::constant(field, 1);
  for (auto& f : qnj_factors) product *= f;
  check("split_bound", "pi_{q n_j} splits into <= q-1 irreducibles, each of degree >= n_j-1",
        r.qnj_split_count <= q - 1 && r.qnj_min_factor_degree >= nj - 1 && r.qnj_split_count == split.count &&
            product == pi_qnj);

  // omega: mark 1 on pi_{n_j}, 0 on every factor of pi_{q n_j}, and the
  // optional marks on the fixed blocks pi_1, pi_q.
  std::vector<Poly> marked{pi_nj};
  r.fixed_marked_degree = 0;
  if (options.mark_pi1) {
    marked.push_back(pi_1);
    r.fixed_marked_degree += 1;
  }
  if (options.mark_piq) {
    for (auto& f : cyclotomic_factors(field, q)) marked.push_back(f);
    r.fixed_marked_degree += q - 1;
  }
  const SystemSpec spec{field, explicit_marks(field, marked), "construction"};
  const bool qnj_unmarked = std::none_of(qnj_factors.begin(), qnj_factors.end(),
                                         [&](const Poly& f) { return omega_mark(spec.omega, f) == 1; });
  check("fixed_factors",
        "omega vanishes on every factor of pi_{q n_j}; fixed-factor constant A = p^-" +
            std::to_string(r.fixed_marked_degree) + " lies in (0, 1]",
        qnj_unmarked && r.fixed_marked_degree <= q);

  r.e_qnj = periodic_exponent(spec, qnj).e;
  const std::uint64_t upper = qnj - (nj - 1);
  check("count_bounds", "p^{q n_j} p^{-(n_j-1)} A <= |F_{q n_j}| <= p^{q n_j} p^{-(n_j-1)}",
        r.e_qnj <= upper && r.e_qnj + r.fixed_marked_degree >= upper);

  r.b_exponent = static_cast<std::int64_t>(r.e_qnj) - static_cast<std::int64_t>((q - 1) * nj);
  check("b_bounds", "|F_{q n_j}| = p^{(q-1) n_j} B_j with p A <= B_j <= p",
        r.b_exponent <= 1 && r.b_exponent >= 1 - static_cast<std::int64_t>(r.fixed_marked_degree));

  const Rational rate(BigInt(r.e_qnj), BigInt(qnj));
  const Rational target(BigInt(q - 1), BigInt(q));
  r.rate_gap = abs(rate - target);
  check("rate_limit", "|e/(q n_j) - (1 - 1/q)| <= 1/n_j",
        r.rate_gap <= Rational(BigInt(1), BigInt(nj)) &&
            r.rate_gap == Rational(BigInt(boost::multiprecision::abs(BigInt(r.b_exponent))), BigInt(qnj)));
  return r;
}

}  // namespace szeta
