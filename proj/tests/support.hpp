#pragma once

// Seeded generators for the property tests.

#include "polyfrenet/exact.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  int sign() { return integer(0, 1) ? 1 : -1; }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  std::vector<int> signs(int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) out.push_back(sign());
    return out;
  }

  /// p/q with 1 <= p <= num_max, 1 <= q <= den_max.
  polyfrenet::Rational positive(int num_max = 20, int den_max = 8) {
    polyfrenet::Rational q(integer(1, num_max), integer(1, den_max));
    q.canonicalize();
    return q;
  }

  polyfrenet::Rational any(int num_max = 20, int den_max = 8) {
    polyfrenet::Rational q(integer(-num_max, num_max), integer(1, den_max));
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
