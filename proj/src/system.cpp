#include "szeta/system.hpp"

#include <algorithm>
#include <random>

#include "szeta/cyclofactor.hpp"
#include "szeta/numtheory.hpp"
#include "szeta/orders.hpp"

namespace szeta {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_period(std::uint64_t n) {
  if (n == 0 || n > kMaxPeriod) {
    throw InvalidInput("period n=" + std::to_string(n) + " outside [1, 2^31-1]");
  }
}

bool is_t(const Poly& v) { return v == Poly::monomial(v.field(), 1); }

}  // namespace

ExplicitMarks explicit_marks(PrimeField field, std::vector<Poly> places) {
  for (auto& v : places) {
    if (!(v.field() == field)) throw InvalidInput("explicit_marks: place over a different field");
    if (v.is_constant()) throw InvalidInput("explicit_marks: constant polynomial is not a place");
    v = v.monic();
    if (is_t(v)) throw InvalidInput("explicit_marks: the place t is handled structurally and cannot be marked");
    if (!is_irreducible(v)) throw InvalidInput("explicit_marks: " + to_string(v) + " is not irreducible");
  }
  std::sort(places.begin(), places.end(), canonical_less);
  places.erase(std::unique(places.begin(), places.end()), places.end());
  return {std::move(places)};
}

RandomMarks random_marks(const Rational& rho, std::uint64_t seed) {
  if (rho <= 0 || rho >= 1) throw InvalidInput("random_marks: rho must lie strictly between 0 and 1");
  const BigInt two64 = BigInt(1) << 64;
  const Rational scaled = (1 - rho) * Rational(two64);
  const BigInt threshold = numerator(scaled) / denominator(scaled);
  return {rho, seed, static_cast<std::uint64_t>(threshold)};
}

SystemSpec preset_system(PrimeField field, const std::string& name) {
  if (name == "full") return {field, AllZeroMarks{}, "full"};
  if (name == "trivial") return {field, AllOneMarks{}, "trivial"};
  if (name == "example85") {
    return {field, explicit_marks(field, {Poly(field, {-1, 1})}), "example85"};
  }
  throw InvalidInput("unknown system preset '" + name + "' (expected full, trivial or example85)");
}

std::uint64_t mark_draw(std::uint64_t seed, const Poly& v) {
  // seed_seq and mt19937_64 are fully specified by the standard, so the draw
  // is identical on every conforming platform.
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), v.p(),
                                 static_cast<std::uint32_t>(v.coeffs().size())};
  key.insert(key.end(), v.coeffs().begin(), v.coeffs().end());
  std::seed_seq seq(key.begin(), key.end());
  std::mt19937_64 gen(seq);
  return gen();
}

int omega_mark(const OmegaSource& source, const Poly& v) {
  if (is_t(v)) throw InvalidInput("omega_mark: the place t carries no mark");
  return std::visit(Overloaded{
                        [](const AllZeroMarks&) { return 0; },
                        [](const AllOneMarks&) { return 1; },
                        [&](const ExplicitMarks& m) {
                          return std::binary_search(m.places.begin(), m.places.end(), v, canonical_less) ? 1 : 0;
                        },
                        [&](const RandomMarks& m) { return mark_draw(m.seed, v) < m.threshold ? 1 : 0; },
                    },
                    source);
}

std::vector<InvertedPlace> inverted_places_dividing(const SystemSpec& spec, std::uint64_t n) {
  require_period(n);
  std::vector<InvertedPlace> out;
  if (std::holds_alternative<AllZeroMarks>(spec.omega)) return out;
  if (auto* m = std::get_if<ExplicitMarks>(&spec.omega)) {
    for (auto& v : m->places) {
      const auto mult = ord_in_tn_minus_1(v, n);
      if (mult > 0) out.push_back({Place::finite(v), mult, v.degree()});
    }
    return out;
  }
  for (auto& part : factor_tn_minus_1(spec.field, n).parts) {
    for (auto& v : part.factors) {
      if (omega_mark(spec.omega, v) == 1) out.push_back({Place::finite(v), part.multiplicity, v.degree()});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const InvertedPlace& a, const InvertedPlace& b) { return canonical_less(a.place.poly(), b.place.poly()); });
  return out;
}

PeriodicExponent periodic_exponent(const SystemSpec& spec, std::uint64_t n) {
  require_period(n);
  if (std::holds_alternative<AllZeroMarks>(spec.omega)) return {n, n};
  if (std::holds_alternative<AllOneMarks>(spec.omega)) {
    // Every factor of t^n - 1 is marked and their degrees times
    // multiplicities add up to n.
    return {n, 0};
  }
  std::uint64_t removed = 0;
  for (auto& ip : inverted_places_dividing(spec, n)) removed += ip.multiplicity * ip.degree;
  if (removed > n) {
    throw InvariantViolation("periodic_exponent: marked places remove " + std::to_string(removed) +
                             " > n=" + std::to_string(n));
  }
  return {n, n - removed};
}

BigInt periodic_count(const SystemSpec& spec, std::uint64_t n) {
  const auto pe = periodic_exponent(spec, n);
  return boost::multiprecision::pow(BigInt(spec.field.p()), static_cast<unsigned>(pe.e));
}

}  // namespace szeta
