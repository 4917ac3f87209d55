#pragma once

// Curves with prescribed curvature functions, built by integrating
//   x' = F_1,   F_i' = sum_j Omega_ij(s) F_j + h(F_1, F_i)
// in the chart of an embedded model (h is the model's normal part), and the
// numeric checks run on the result.

#include "polyfrenet/frenet.hpp"
#include "polyfrenet/metric.hpp"
#include "polyfrenet/space_forms.hpp"
#include "polyfrenet/tension.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyfrenet {

struct SynthesisTolerances {
  double ode_rel = 1e-10;
  double ode_abs = 1e-12;
  /// Integration aborts when orthonormality drift or on-model defect exceeds this.
  double drift_max = 1e-6;
};

struct SynthesisProblem {
  std::shared_ptr<const EmbeddedModel> geometry;
  FrenetCurve fc;
  CoordVector initial_point;
  std::vector<CoordVector> initial_frame;
  double s_begin = 0.0;
  double s_end = 1.0;
  /// Sample positions; when empty, `samples` equally spaced points over [s_begin, s_end].
  std::vector<double> grid;
  int samples = 201;
  SynthesisTolerances tol;
  /// Gram-Schmidt the frame every N samples (0 = never). Corrections are logged.
  int reorthonormalize_every = 0;
};

/// Fills initial_point/initial_frame from the model's canonical choice for fc.sig.
void auto_initial_data(SynthesisProblem& p);

struct CurveSample {
  double s = 0.0;
  CoordVector point;
  std::vector<CoordVector> frame;
  double drift = 0.0;
  double defect = 0.0;
};

struct Reorthonormalization {
  double s = 0.0;
  double correction = 0.0;  // max coordinate change of the frame
};

struct CurveSolution {
  std::vector<int> eps;
  std::vector<CurveSample> samples;
  double max_drift = 0.0;
  double max_defect = 0.0;
  std::vector<Reorthonormalization> reorthonormalizations;
};

class DriftExceeded : public std::runtime_error {
 public:
  DriftExceeded(double s, double drift, double defect);
  double s() const { return s_; }
  double drift() const { return drift_; }
  double defect() const { return defect_; }

 private:
  double s_, drift_, defect_;
};

/// Throws std::invalid_argument when the initial data violate the problem invariants
/// and DriftExceeded when drift or defect passes tol.drift_max.
CurveSolution integrate_frenet(const SynthesisProblem& p);

/// max over samples of |<F_i,F_j> - eps_i delta_ij|.
double orthonormality_drift(const CurveSolution& sol, const EmbeddedModel& geometry);

/// Helix mode: max |coefficient| of tau_r on the unit frame for a curvature action.
double helix_tension_residual(const Helix& h, const CurvatureAction<double>& R, int r);
/// Helix mode on a space form.
double helix_tension_residual(const Helix& h, double c, int r);

/// General mode: at each sample, (nabla_T)^k T is assembled from the curvature
/// functions in frame coefficients, mapped to the chart with the integrated frame,
/// and combined with the model curvature. Residual is the max-norm of tau_r in
/// chart coordinates.
std::vector<double> numeric_tension(const CurveSolution& sol, const FrenetCurve& fc, const EmbeddedModel& geometry,
                                    int r);

/// Curvatures read back from sampled frames, k_i = eps_{i+1} <F_i', F_{i+1}>, with
/// F_i' from fourth-order differences. Needs a uniform grid of at least 5 samples.
struct FrenetAnalysis {
  std::vector<double> s;
  std::vector<std::vector<double>> k;  // k[i][j] = k_{i+1}(s_j)
};
FrenetAnalysis frenet_analysis(const CurveSolution& sol, const EmbeddedModel& geometry);

/// Curvature functions interpolating an analysis (cubic B-splines, order <= 2).
FrenetCurve curve_from_analysis(const FrenetAnalysis& a, const Signature& sig);

/// Max coordinate distance between the points of two solutions sampled on the same grid.
double max_point_distance(const CurveSolution& a, const CurveSolution& b);

}  // namespace polyfrenet
