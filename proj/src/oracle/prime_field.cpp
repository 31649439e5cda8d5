#include "qweyl/oracle/prime_field.hpp"

#include <vector>

namespace qweyl::oracle {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<__uint128_t>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw SingularSample("inverse of zero in prime field");
  return powmod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u32 PrimeField::reduce(const Rational& r) const {
  mpz_class num = r.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = r.get_den() % p;
  if (den == 0) throw SingularSample("scalar denominator vanishes mod p");
  return static_cast<u32>(mulmod(num.get_ui(), invmod(den.get_ui(), p), p));
}

u32 PrimeField::qpow(long k) const {
  long m = k % order;
  if (m < 0) m += order;
  return static_cast<u32>(powmod(zeta, static_cast<u64>(m), p));
}

namespace {

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> f;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

PrimeField field_for_order(int order, u64 floor) {
  if (order < 1) throw std::invalid_argument("root-of-unity order must be positive");
  u64 p = floor + 1;
  while (p % order != 1 % static_cast<u64>(order) || !is_prime(p)) ++p;
  if (p >= (1ULL << 26)) throw std::invalid_argument("prime too large for the matrix kernels");
  PrimeField f;
  f.p = static_cast<u32>(p);
  f.order = order;
  auto ord_factors = prime_factors(static_cast<u64>(order));
  for (u64 g = 2; g < p; ++g) {
    u64 z = powmod(g, (p - 1) / order, p);
    bool primitive = true;
    for (u64 r : ord_factors)
      if (powmod(z, order / r, p) == 1) primitive = false;
    if (primitive) {
      f.zeta = static_cast<u32>(z);
      return f;
    }
  }
  throw std::logic_error("no primitive root of unity found");
}

PrimeField field_at_one(u64 floor) { return field_for_order(1, floor); }

u64 uniform_below(std::mt19937_64& rng, u64 bound) {
  u64 limit = ~0ULL - (~0ULL % bound);
  for (;;) {
    u64 x = rng();
    if (x < limit) return x % bound;
  }
}

u32 random_nonzero(std::mt19937_64& rng, u32 p) {
  return static_cast<u32>(1 + uniform_below(rng, p - 1));
}

u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

u64 derive_seed(u64 seed, std::initializer_list<u64> parts) {
  u64 h = splitmix64(seed);
  for (u64 v : parts) h = splitmix64(h ^ splitmix64(v));
  return h;
}

}  // namespace qweyl::oracle
