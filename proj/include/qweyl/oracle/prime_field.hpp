#pragma once

#include <cstdint>
#include <random>

#include "qweyl/system.hpp"

namespace qweyl::oracle {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
bool is_prime(u64 n);

// Z/p with a fixed primitive N-th root of unity zeta.
struct PrimeField {
  u32 p = 0;
  u32 zeta = 1;
  int order = 1;

  u32 reduce(const Rational& r) const;  // throws SingularSample on a zero denominator
  u32 qpow(long k) const;
};

// Smallest prime p > floor with p = 1 mod order, together with a
// primitive order-th root of unity.
PrimeField field_for_order(int order, u64 floor = (1ULL << 20));

// Field of the q = 1 specialization.
PrimeField field_at_one(u64 floor = (1ULL << 20));

// Portable uniform sampling (std distributions are implementation-defined).
u64 uniform_below(std::mt19937_64& rng, u64 bound);
u32 random_nonzero(std::mt19937_64& rng, u32 p);
u64 splitmix64(u64 x);
u64 derive_seed(u64 seed, std::initializer_list<u64> parts);

class SingularSample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qweyl::oracle
