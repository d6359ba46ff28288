#include "szeta/numtheory.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace szeta {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<unsigned, 20> kBases = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                             31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
constexpr u64 kTrialBound = 1000000;

u64 mul_mod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

bool strong_probable_prime(const BigInt& n, const BigInt& d, unsigned s, unsigned base) {
  BigInt x = boost::multiprecision::powm(BigInt(base), d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

BigInt pollard_brent(const BigInt& n, unsigned long long c_seed) {
  if (n % 2 == 0) return 2;
  BigInt c = c_seed;
  BigInt y = 2, x, q = 1, g = 1, ys;
  const unsigned m = 128;
  auto step = [&](const BigInt& v) { return (v * v + c) % n; };
  unsigned long long r = 1;
  while (g == 1) {
    x = y;
    for (unsigned long long i = 0; i < r; ++i) y = step(y);
    unsigned long long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const auto lim = std::min<unsigned long long>(m, r - k);
      for (unsigned long long i = 0; i < lim; ++i) {
        y = step(y);
        q = q * abs(x - y) % n;
      }
      g = boost::multiprecision::gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = boost::multiprecision::gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void split_rho(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long long c = 1;; ++c) {
    BigInt d = pollard_brent(n, c);
    if (d != 1 && d != n) {
      split_rho(d, out);
      split_rho(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are exact for all n < 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<u64>::max()) return is_prime_u64(static_cast<u64>(n));
  for (unsigned q : kBases) {
    if (n % q == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  return std::all_of(kBases.begin(), kBases.end(),
                     [&](unsigned a) { return strong_probable_prime(n, d, s, a); });
}

std::vector<PrimePower> factor_integer(const BigInt& n_in) {
  if (n_in < 1) throw InvalidInput("factor_integer: argument must be positive");
  BigInt n = n_in;
  std::map<BigInt, unsigned> found;
  for (u64 q = 2; q <= kTrialBound; q += (q == 2 ? 1 : 2)) {
    if (BigInt(q) * q > n) break;
    while (n % q == 0) {
      ++found[q];
      n /= q;
    }
  }
  if (n > 1) {
    if (n <= BigInt(kTrialBound) * kTrialBound) {
      ++found[n];
    } else {
      split_rho(n, found);
    }
  }
  std::vector<PrimePower> out;
  for (auto& [prime, e] : found) out.push_back({prime, e});
  return out;
}

std::vector<PrimePowerU64> factor_u64(u64 n) {
  std::vector<PrimePowerU64> out;
  for (auto& f : factor_integer(n)) {
    out.push_back({static_cast<u64>(f.prime), f.exponent});
  }
  return out;
}

u64 pow_mod_u64(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod_u64(result, base, m);
    base = mul_mod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw InvalidInput("euler_phi: n must be positive");
  u64 phi = n;
  for (auto& f : factor_u64(n)) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

int mobius(u64 n) {
  if (n == 0) throw InvalidInput("mobius: n must be positive");
  int mu = 1;
  for (auto& f : factor_u64(n)) {
    if (f.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<u64> divisors(u64 n) {
  if (n == 0) throw InvalidInput("divisors: n must be positive");
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt lcm(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

PrimePartSplit split_prime_part(u64 n, u64 p) {
  if (n == 0) throw InvalidInput("split_prime_part: n must be positive");
  PrimePartSplit s{n, 0, 1};
  while (s.coprime % p == 0) {
    s.coprime /= p;
    ++s.exponent;
    s.prime_power *= p;
  }
  return s;
}

}  // namespace szeta
