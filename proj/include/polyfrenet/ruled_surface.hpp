#pragma once

// Triharmonic curves with non-constant curvature on the ruled Lorentz surface
// X(s,v) = gamma(s) + v N(s) of a curve gamma in R^3_1. The curvature profile
// solves 5k'^2 + k^4 = 1, the torsion is then read off algebraically, and the
// two triharmonicity residuals are evaluated pointwise.

#include <array>
#include <string>
#include <vector>

namespace polyfrenet {

struct FirstFundamentalForm {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
};

/// E = eps1 (1 - eps1 k v)^2 + eps3 tau^2 v^2, F = 0, G = eps2.
FirstFundamentalForm first_fundamental_form(double v, double k, double tau, int e1, int e2, int e3);

/// Gaussian curvature of the surface along gamma for the sign pattern with
/// eps1 eps2 eps3 = -1: K = tau^2.
double gauss_curvature_along_gamma(double tau);

/// 5k'^2 + k^4 + 2 c1 / k - c2 (zero along solutions of the first integral).
double conservation_law(double k, double k_prime, double c1, double c2);

struct ProfileSample {
  double s = 0.0;
  std::array<double, 5> d{};  // k, k', k'', k''', k''''
};

struct ProfileOptions {
  double s0 = 0.0;
  double s_begin = -0.5;
  double s_end = 0.5;
  int samples = 201;
  double ode_rel = 1e-12;
  double ode_abs = 1e-14;
};

/// Integrates k'' = -(2/5) k^3 from k(s0) = k0, k'(s0) = +sqrt((1 - k0^4)/5),
/// which stays on 5k'^2 + k^4 = 1. Higher derivatives follow from the ODE.
/// Throws std::invalid_argument unless 0 < k0 < (1/2)^(1/4).
std::vector<ProfileSample> solve_profile(double k0, const ProfileOptions& opt = {});

/// tau^2 = 63 (1 - 2k^4) / (10 k^2 (eps1 + 5 eps2)). Returns 0 when the numerator
/// vanishes to rounding; throws std::domain_error when the value is negative.
double torsion_from_profile(double kbar, int e1, int e2);

/// res1 = k''' k + 2k^3 k' + 2k' k'',
/// res2 = (eps1 k'' - 2 eps2 k^3) tau^2 + k'''' + 10k^2 k'' + 15k k'^2 + k^5.
std::array<double, 2> triharmonic_residual(const std::array<double, 5>& k, double tau_sq, int e1, int e2);

struct RuledOptions {
  double k0 = 0.5;
  ProfileOptions profile;
  std::array<int, 3> eps{-1, 1, 1};
  /// Samples with tau^2 below this floor end the admissible window.
  double tau_sq_floor = 1e-6;
  /// Number of v values per s sample in the Lorentz strip check.
  int strip_samples = 21;
};

struct RuledRow {
  double s = 0.0;
  std::array<double, 5> k{};
  double tau_sq = 0.0;
  double conservation = 0.0;
  std::array<double, 2> residual{};
};

struct RuledSurfaceData {
  std::array<int, 3> eps{};
  double window_begin = 0.0;
  double window_end = 0.0;
  double delta = 0.0;
  std::vector<RuledRow> rows;  // admissible window only
  double max_conservation = 0.0;
  double max_residual = 0.0;
  double k_range = 0.0;
  bool lorentz_strip = false;
};

/// Full pipeline: profile, torsion, residuals, window and strip half-width.
RuledSurfaceData run_ruled_pipeline(const RuledOptions& opt = {});

}  // namespace polyfrenet
