#pragma once

// Closed-form r-harmonicity conditions for Frenet helices in space forms,
// solved on squared curvatures in exact arithmetic.

#include "polyfrenet/exact.hpp"
#include "polyfrenet/metric.hpp"
#include "polyfrenet/tension.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyfrenet {

enum class Status { feasible, infeasible };

std::string to_string(Status s);

struct Solution {
  /// Named squared-curvature values, e.g. {"tau^2", 3}.
  std::vector<std::pair<std::string, QuadraticSurd>> values;
  /// Non-empty for one-parameter families: the defining relation.
  std::string family;
  /// Set for roots that violate positivity of a curvature (tau^2 = 0).
  bool degenerate = false;
  /// Which branch of the case analysis produced it.
  std::string branch;

  const QuadraticSurd* find(const std::string& name) const;
};

struct ClassificationResult {
  std::string theorem;  // identifier of the condition that was applied
  Status status = Status::infeasible;
  std::vector<Solution> solutions;
  std::vector<std::pair<std::string, std::string>> inputs;  // echoed, exact strings
  std::string note;

  bool feasible() const { return status == Status::feasible; }
};

/// 2-Frenet helix in N^m_t(c): proper r-harmonic iff k^2 = eps2 (r-1) c > 0.
/// surface = true enforces eps1 eps2 = -1 (curve on a Lorentz surface); for the
/// space-like choice eps = (1,-1) this is k^2 = -(r-1) c.
ClassificationResult classify_2frenet(const Rational& c, int e1, int e2, int r, bool surface = false);

/// Triharmonic 2-Frenet helix: feasible iff eps2 c > 0, with k^2 = 2 eps2 c.
ClassificationResult classify_triharmonic_2frenet(const Rational& c, int e2);

/// 3-Frenet helix (k, tau) in N^m_t(c). Without kappa_sq the defining relation
/// and existence verdict are returned; with kappa_sq the admissible tau^2 values
/// are listed ascending (tau^2 = 0 roots flagged degenerate, negatives dropped).
ClassificationResult classify_3frenet(const Rational& c, int e1, int e2, int e3, int r,
                                      const std::optional<Rational>& kappa_sq = std::nullopt);

/// Verdict of the 3-Frenet classifier for one (k^2, tau^2) pair.
bool three_frenet_is_solution(const Rational& c, int e1, int e2, int e3, int r, const Rational& kappa_sq,
                              const Rational& tau_sq);
bool two_frenet_is_solution(const Rational& c, int e1, int e2, int r, const Rational& kappa_sq);

/// Biharmonic n-Frenet curves (n >= 4) in a space form. With full = true the
/// verdict is the non-existence certificate; with full = false k_3 = 0 is
/// admitted and the remaining family is reported.
ClassificationResult classify_nfrenet_biharmonic(const Signature& sig, const Rational& c, bool full = true);

/// Residuals of the biharmonicity system of an n-Frenet curve (n >= 4) in a
/// general ambient space, given <R(F_2,F_1)F_1, .> through R21 = R(F_2,F_1)F_1 on
/// the unit frame. All residuals vanish iff the curve is biharmonic.
struct BiharmonicSystem {
  std::vector<std::string> equations;
  std::vector<double> residuals;

  double max_abs() const;
};
BiharmonicSystem nfrenet_biharmonic_system(const FrenetPointData& p, const FrameVector<double>& R21);

/// Triharmonic n-Frenet helices for n in {4, 5}. kappa_sq holds either all n-1
/// squared curvatures (check) or the first n-2 (the last one is solved for).
ClassificationResult classify_nfrenet_triharmonic(const Signature& sig, const Rational& c,
                                                  const std::vector<Rational>& kappa_sq);

/// Both sides of the two triharmonicity equations (n = 4, 5).
struct TriharmonicEquations {
  Rational lhs1, rhs1, lhs2, rhs2;

  bool hold() const { return lhs1 == rhs1 && lhs2 == rhs2; }
};
TriharmonicEquations nfrenet_triharmonic_equations(const Signature& sig, const Rational& c,
                                                   const std::vector<Rational>& kappa_sq);

}  // namespace polyfrenet
