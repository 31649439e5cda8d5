#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qweyl/monomial.hpp"

namespace qweyl::series {

inline constexpr int kMaxLetters = 8;

// Exponent vector of a series monomial (noncommuting letters, then centrals).
struct Key {
  std::array<std::int8_t, kMaxLetters> e{};

  bool operator==(const Key& o) const { return e == o.e; }
  bool operator<(const Key& o) const { return e < o.e; }

  static Key from(const std::vector<int>& exps) {
    if (exps.size() > kMaxLetters) throw std::invalid_argument("too many series letters");
    Key k;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < -127 || exps[i] > 127) throw std::overflow_error("series exponent out of range");
      k.e[i] = static_cast<std::int8_t>(exps[i]);
    }
    return k;
  }

  std::vector<int> to_vector(int n) const {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = e[i];
    return v;
  }

  Key plus(const Key& o) const {
    Key r;
    for (int i = 0; i < kMaxLetters; ++i) {
      int s = e[i] + o.e[i];
      if (s < -127 || s > 127) throw std::overflow_error("series exponent out of range");
      r.e[i] = static_cast<std::int8_t>(s);
    }
    return r;
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t v;
    std::memcpy(&v, k.e.data(), sizeof v);
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdULL;
    v ^= v >> 33;
    return static_cast<std::size_t>(v);
  }
};

}  // namespace qweyl::series
