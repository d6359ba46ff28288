#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "szeta/ffpoly.hpp"
#include "szeta/places.hpp"

namespace szeta {

// omega = 0 everywhere: R = F_p[t, 1/t], the full p-shift.
struct AllZeroMarks {
  friend bool operator==(const AllZeroMarks&, const AllZeroMarks&) = default;
};

// omega = 1 everywhere: R = F_p(t), a single periodic point for every n.
struct AllOneMarks {
  friend bool operator==(const AllOneMarks&, const AllOneMarks&) = default;
};

// omega = 1 exactly on a finite set of places. Built with explicit_marks(),
// which validates, sorts and deduplicates.
struct ExplicitMarks {
  std::vector<Poly> places;
  friend bool operator==(const ExplicitMarks&, const ExplicitMarks&) = default;
};

/**
 * Product-measure marks: omega(v) = 0 with probability rho, independently
 * per place. The mark is a pure function of the seed and the polynomial's
 * coefficients, so it does not depend on any enumeration of places.
 */
struct RandomMarks {
  Rational rho;
  std::uint64_t seed;
  std::uint64_t threshold;  // floor((1 - rho) * 2^64); mark 1 iff draw < threshold
  friend bool operator==(const RandomMarks&, const RandomMarks&) = default;
};

using OmegaSource = std::variant<AllZeroMarks, AllOneMarks, ExplicitMarks, RandomMarks>;

ExplicitMarks explicit_marks(PrimeField field, std::vector<Poly> places);
// rho must lie strictly between 0 and 1.
RandomMarks random_marks(const Rational& rho, std::uint64_t seed);

struct SystemSpec {
  PrimeField field;
  OmegaSource omega;
  std::string label;
};

// "full", "trivial" or "example85" (omega = 1 only at t - 1).
SystemSpec preset_system(PrimeField field, const std::string& name);

// The 64-bit draw behind a random mark.
std::uint64_t mark_draw(std::uint64_t seed, const Poly& v);

int omega_mark(const OmegaSource& source, const Poly& v);

struct PeriodicExponent {
  std::uint64_t n;
  std::uint64_t e;  // |F_n| = p^e, 0 <= e <= n
  friend bool operator==(const PeriodicExponent&, const PeriodicExponent&) = default;
};

// e_n = n - sum over marked v of ord_v(t^n - 1) * deg v.
PeriodicExponent periodic_exponent(const SystemSpec& spec, std::uint64_t n);

BigInt periodic_count(const SystemSpec& spec, std::uint64_t n);

struct InvertedPlace {
  Place place;
  std::uint64_t multiplicity;
  std::uint64_t degree;
};

// Marked places dividing t^n - 1 with their multiplicities, canonical order.
std::vector<InvertedPlace> inverted_places_dividing(const SystemSpec& spec, std::uint64_t n);

}  // namespace szeta
