#pragma once

// Grid sweeps comparing the closed-form classifiers with the tension oracle.
//
// Both r-harmonicity and the classifier verdicts are invariant under
// (k^2, tau^2, c) -> mu (k^2, tau^2, c), mu > 0 (a homothety of the metric), so a
// grid with step 1/q is evaluated on integers after multiplying by q. The
// oracle then runs in overflow-checked int64 and drops to GMP rationals only
// when a product would overflow.

#include "polyfrenet/exact.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace polyfrenet {

struct SweepSpec {
  std::vector<int> ns{2, 3};
  std::vector<int> rs{2, 3, 4, 5};
  std::vector<Rational> cs{-2, -1, 0, 1, 2};
  /// Grid over every squared curvature: step, 2*step, ..., max.
  Rational step{1, 4};
  Rational max = 10;
  /// Restrict to these sign patterns (each must have length n); empty = all 2^n.
  std::vector<std::vector<int>> signatures;
  /// n = 2 only: curves on Lorentz surfaces (eps1 eps2 = -1 patterns).
  bool surface = false;
  /// Refuse to run when the point count exceeds this.
  std::size_t max_points = 50'000'000;
};

struct SweepPoint {
  std::vector<int> eps;
  int r = 0;
  Rational c;
  std::vector<Rational> kappa_sq;
  bool classifier = false;  // closed form says proper r-harmonic
  bool oracle = false;      // tension field vanishes
};

struct SweepSummary {
  std::size_t points = 0;
  std::size_t agreements = 0;
  std::size_t classifier_feasible = 0;
  std::size_t oracle_zero = 0;
  std::size_t overflow_fallbacks = 0;
  std::vector<SweepPoint> mismatches;  // first few only
  bool all_agree() const { return agreements == points; }
};

class GridTooLarge : public std::runtime_error {
 public:
  explicit GridTooLarge(std::size_t points);
  std::size_t points() const { return points_; }

 private:
  std::size_t points_;
};

std::size_t sweep_point_count(const SweepSpec& spec);

/// All sign vectors of length n, lexicographic with -1 before +1.
std::vector<std::vector<int>> all_signatures(int n);

/// Runs the 2- and 3-Frenet sweep. `sink`, when given, sees every point in grid
/// order (signature, r, c, then curvatures).
SweepSummary run_helix_sweep(const SweepSpec& spec, const std::function<void(const SweepPoint&)>& sink = {});

/// Non-existence sweep for full biharmonic n-Frenet helices (n = 4, 5) in space
/// forms. For n = 5 the bitension never reaches G_5, so k_4 only enters through
/// the listed sample values.
struct BiharmonicSweepSpec {
  int n = 4;
  std::vector<Rational> cs{-2, -1, 0, 1, 2};
  Rational step{1, 4};
  Rational max = 10;
  std::vector<Rational> last_samples{Rational(1, 4), 5, 10};  // n = 5 only
  std::vector<std::vector<int>> signatures;                  // empty = all
};
SweepSummary run_biharmonic_sweep(const BiharmonicSweepSpec& spec);

}  // namespace polyfrenet
