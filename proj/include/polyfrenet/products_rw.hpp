#pragma once

// Helices in the Lorentzian product R x N^{m-1}(c) obtained by lifting fiber
// helices, and 2-Frenet curves in Robertson-Walker space-times
// J x N^{m-1}(c) with metric -dt^2 + f(t)^2 g.

#include "polyfrenet/exact.hpp"
#include "polyfrenet/frenet.hpp"
#include "polyfrenet/space_forms.hpp"
#include "polyfrenet/tension.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace polyfrenet {

// ---------------------------------------------------------------- products

/// gamma(s) = (d1 s, alpha(d2 s)) with alpha a fiber helix (k_a, tau_a) and
/// d2^2 = eps1 + d1^2. Everything is carried as squares so it stays exact.
struct ProductLift {
  Rational d1_sq;
  Rational kappa_alpha_sq;
  Rational tau_alpha_sq;
  int eps1 = 1;
  int eps3 = 1;
};

struct LiftedHelix {
  Rational kappa_sq;
  Rational tau_sq;
  Rational d2_sq;
  std::vector<int> eps;  // (eps1, 1, eps3)
  /// eps1 k^2 + eps3 tau^2, which equals (d1^2 + eps1)(k_a^2 + tau_a^2) and is never zero.
  Rational frenet_sum;
};

/// Throws std::invalid_argument when eps1 + d1^2 <= 0, when
/// eps3 (tau_a^2 - eps1 d1^2 k_a^2) <= 0, or when a fiber curvature is not positive.
LiftedHelix lift_to_product(const ProductLift& p);

/// Floating-point lift from unsquared data: returns (kappa, tau) of the lifted helix.
struct LiftedHelixD {
  double kappa = 0.0;
  double tau = 0.0;
  double d2 = 0.0;
  double frenet_sum = 0.0;
};
LiftedHelixD lift_to_product(double d1, double kappa_alpha, double tau_alpha, int eps1, int eps3);

struct ProductCheck {
  Rational lifted;  // value of the lifted-helix condition
  Rational fiber;   // value of the fiber-helix condition
  bool lifted_holds = false;
  bool fiber_holds = false;
  bool agree() const { return lifted_holds == fiber_holds; }
};

/// Evaluates both forms of the r-harmonicity condition. Throws for c = 0.
ProductCheck product_r_harmonic_check(const ProductLift& p, const Rational& c, int r);

/// Independent oracle: tau_r of the lifted curve computed on the frame
/// (d/dt, T_a, N_a, B_a) from the fiber's Frenet equations and the product curvature.
TensionResult<double> product_tension_oracle(double d1, double kappa_alpha, double tau_alpha, int eps1, double c,
                                             int r);

// ---------------------------------------------------------- Robertson-Walker

struct RWModel {
  std::function<double(double)> f, fp, fpp;
  double j_begin = 0.0;
  double j_end = 0.0;
  int m = 4;
  Rational c = 0;
  /// Set for the power-law family f = t^lambda on (0, inf).
  std::optional<Rational> lambda;
  std::string description;

  static RWModel power_law(const Rational& lambda, int m = 4, const Rational& c = 0);
  static RWModel exponential(double a, int m = 4, const Rational& c = 0);
  static RWModel cosh_model(int m = 4, const Rational& c = 0);

  bool contains(double t) const { return t > j_begin && t < j_end; }
  /// -f f'' / f'^2.
  double deceleration(double t) const;
};

/// Normal coefficient of tau_r for a 2-Frenet helix with N = d/dt:
/// -k^(2r-3) (k^2 + (r-1) f''/f).
double rw_tension_normal(double kappa, int r, double f_ratio);
/// The same on the scaled frame (coefficient of G_2 = k N), exact: -(k^2)^(r-2) (k^2 + (r-1) rho).
Rational rw_tension_normal_scaled(const Rational& kappa_sq, int r, const Rational& rho);

struct RWCheck {
  bool proper_r_harmonic = false;
  double kappa = 0.0;
  double kappa_sq = 0.0;
  double d = 0.0;              // 1 / f(t0), speed of the fiber geodesic
  double condition = 0.0;      // f'^2 + (r-1) f f''
  std::optional<Rational> kappa_exact;  // power law with rational t0
};

/// Whether gamma(s) = (t0, alpha(s / f(t0))), alpha a fiber geodesic, is proper r-harmonic.
/// Throws std::out_of_range when t0 is outside J.
RWCheck rw_r_harmonic_check(const RWModel& model, double t0, int r);
/// Power-law version with exact t0.
RWCheck rw_r_harmonic_check(const RWModel& model, const Rational& t0, int r);

/// lambda^2 + (r-1) lambda (lambda - 1): the t-independent factor of f'^2 + (r-1) f f'' for f = t^lambda.
Rational power_law_condition(const Rational& lambda, int r);
/// -(lambda - 1) / lambda.
Rational power_law_deceleration(const Rational& lambda);

struct RescalingCheck {
  std::vector<double> gamma_coeffs;  // tau_r(gamma) on gamma's unit frame
  std::vector<double> beta_coeffs;   // tau_r(beta) on beta's unit frame
  double relation_error = 0.0;       // max |a_i / f - f^(-2r) b_i|, relative
  bool gamma_harmonic = false;
  bool beta_harmonic = false;
  bool agree() const { return gamma_harmonic == beta_harmonic; }
};

/// gamma(s) = (t0, alpha(s)) at a critical point of f versus beta(s) = alpha(f(t0) s),
/// for a fiber helix beta with the given unit-speed curvatures. Throws
/// std::invalid_argument when |f'(t0)| > 1e-12.
RescalingCheck rw_rescaling_check(const RWModel& model, double t0, const std::vector<double>& beta_kappas, int r);

/// Curvature action on a frame whose vectors are each either d/dt (vertical) or
/// tangent to the fiber, with Gram diagonal `gram`:
///   both horizontal: K = (f'^2 + c)/f^2, exactly one vertical: f''/f.
CurvatureAction<double> rw_frame_curvature(const RWModel& model, double t0, std::vector<bool> vertical,
                                           std::vector<double> gram);
CurvatureAction<Rational> rw_frame_curvature(const Rational& K, const Rational& rho, std::vector<bool> vertical,
                                             std::vector<Rational> gram);

/// Levi-Civita derivative nabla_X Y for X, Y each d/dt or horizontal:
///   nabla_{d/dt} d/dt = 0, nabla_{d/dt} Y = nabla_X d/dt = (f'/f) (horizontal one),
///   nabla_X Y = (fiber connection) + <X,Y> (f'/f) d/dt.
struct RWConnectionTerm {
  double vertical = 0.0;          // coefficient of d/dt
  double horizontal_scale = 0.0;  // multiple of the horizontal argument
  bool fiber_connection = false;  // the fiber's own derivative also contributes
};
RWConnectionTerm rw_connection(const RWModel& model, double t0, bool x_vertical, bool y_vertical, double xy_inner);

/// tau_r of the 2-Frenet helix with N = d/dt from the generic oracle and the
/// exact curvature table, on the scaled frame (T, kN), eps = (1, -1).
TensionResult<Rational> rw_tension_oracle(const Rational& kappa_sq, const Rational& K, const Rational& rho, int r);

}  // namespace polyfrenet
