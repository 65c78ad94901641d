#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "schurk/arith.hpp"

namespace schurk {

// Seeded random nonzero rationals p/q with |p|, q <= bound.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int bound = 13) : rng_(seed), bound_(bound) {}

  BigRat next() {
    std::uniform_int_distribution<int> num(1, bound_), den(1, bound_), sign(0, 1);
    BigRat r(num(rng_), den(rng_));
    return sign(rng_) ? BigRat(-r) : r;
  }

  // n values, pairwise distinct
  std::vector<BigRat> distinct(std::size_t n) {
    std::vector<BigRat> v;
    while (v.size() < n) {
      BigRat r = next();
      if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
    }
    return v;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int bound_;
};

}  // namespace schurk
