#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "szeta/common.hpp"

namespace szeta {

// Deterministic for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// Miller-Rabin with the first 20 prime bases. Deterministic below 3.3e24 and a
// reproducible strong-probable-prime test above that.
bool is_probable_prime(const BigInt& n);

struct PrimePower {
  BigInt prime;
  unsigned exponent;
};

// Trial division to 10^6, then Brent's variant of Pollard rho on the cofactor.
// Primes ascending.
std::vector<PrimePower> factor_integer(const BigInt& n);

struct PrimePowerU64 {
  std::uint64_t prime;
  unsigned exponent;
};
std::vector<PrimePowerU64> factor_u64(std::uint64_t n);

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending
BigInt lcm(const BigInt& a, const BigInt& b);

// n = coprime * p^exponent with p not dividing coprime.
struct PrimePartSplit {
  std::uint64_t coprime;
  unsigned exponent;
  std::uint64_t prime_power;
};
PrimePartSplit split_prime_part(std::uint64_t n, std::uint64_t p);

}  // namespace szeta
