#include "polyfrenet/products_rw.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyfrenet {

namespace {

void require_sign(int e, const char* name) {
  if (e != 1 && e != -1) throw std::invalid_argument(std::string(name) + " must be +1 or -1");
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

LiftedHelix lift_to_product(const ProductLift& p) {
  require_sign(p.eps1, "eps1");
  require_sign(p.eps3, "eps3");
  if (sgn(p.kappa_alpha_sq) <= 0 || sgn(p.tau_alpha_sq) <= 0)
    throw std::invalid_argument("product lift: fiber curvature and torsion must be positive");
  if (sgn(p.d1_sq) < 0) throw std::invalid_argument("product lift: d1^2 must be non-negative");
  const Rational d2_sq = p.eps1 + p.d1_sq;
  if (sgn(d2_sq) <= 0) throw std::invalid_argument("product lift: eps1 + d1^2 must be positive");
  const Rational t = p.eps3 * d2_sq * (p.tau_alpha_sq - p.eps1 * p.d1_sq * p.kappa_alpha_sq);
  if (sgn(t) <= 0) throw std::invalid_argument("product lift: eps3 (tau_a^2 - eps1 d1^2 k_a^2) must be positive");
  LiftedHelix out;
  out.d2_sq = d2_sq;
  out.kappa_sq = d2_sq * d2_sq * p.kappa_alpha_sq;
  out.tau_sq = t;
  out.eps = {p.eps1, 1, p.eps3};
  out.frenet_sum = p.eps1 * out.kappa_sq + p.eps3 * out.tau_sq;
  if (out.frenet_sum != d2_sq * (p.kappa_alpha_sq + p.tau_alpha_sq))
    throw std::logic_error("product lift: Frenet sum identity failed");
  return out;
}

LiftedHelixD lift_to_product(double d1, double kappa_alpha, double tau_alpha, int eps1, int eps3) {
  require_sign(eps1, "eps1");
  require_sign(eps3, "eps3");
  if (!(kappa_alpha > 0.0) || !(tau_alpha > 0.0))
    throw std::invalid_argument("product lift: fiber curvature and torsion must be positive");
  const double d2_sq = eps1 + d1 * d1;
  if (!(d2_sq > 0.0)) throw std::invalid_argument("product lift: eps1 + d1^2 must be positive");
  const double t = eps3 * d2_sq * (tau_alpha * tau_alpha - eps1 * d1 * d1 * kappa_alpha * kappa_alpha);
  if (!(t > 0.0)) throw std::invalid_argument("product lift: eps3 (tau_a^2 - eps1 d1^2 k_a^2) must be positive");
  LiftedHelixD out;
  out.d2 = std::sqrt(d2_sq);
  out.kappa = d2_sq * kappa_alpha;
  out.tau = std::sqrt(t);
  out.frenet_sum = eps1 * out.kappa * out.kappa + eps3 * t;
  return out;
}

ProductCheck product_r_harmonic_check(const ProductLift& p, const Rational& c, int r) {
  if (sgn(c) == 0) throw std::invalid_argument("product check: needs c != 0");
  if (r < 2) throw std::invalid_argument("product check: needs r >= 2");
  const auto lifted = lift_to_product(p);
  const Rational& k2 = lifted.kappa_sq;
  const Rational& t2 = lifted.tau_sq;
  const int e13 = p.eps1 * p.eps3;
  ProductCheck out;
  out.lifted = k2 * k2 + 2 * k2 * e13 * t2 + t2 * t2 -
               c * (k2 * (r - 1 + p.d1_sq * p.eps1) + (p.d1_sq + p.eps1) * p.eps3 * t2);
  const Rational s = p.kappa_alpha_sq + p.tau_alpha_sq;
  out.fiber = s * s - c * ((r - 1) * p.kappa_alpha_sq + p.tau_alpha_sq);
  out.lifted_holds = sgn(out.lifted) == 0;
  out.fiber_holds = sgn(out.fiber) == 0;
  return out;
}

TensionResult<double> product_tension_oracle(double d1, double kappa_alpha, double tau_alpha, int eps1, double c,
                                             int r) {
  require_sign(eps1, "eps1");
  const double d2_sq = eps1 + d1 * d1;
  if (!(d2_sq > 0.0)) throw std::invalid_argument("product oracle: eps1 + d1^2 must be positive");
  const double d2 = std::sqrt(d2_sq);
  FrameAlgebra<double> fr;
  fr.n = 4;
  fr.eps = {-1, 1, 1, 1};
  fr.gram = {-1.0, 1.0, 1.0, 1.0};
  fr.conn.assign(16, 0.0);
  auto set = [&](int i, int j, double v) { fr.conn[static_cast<std::size_t>(i * 4 + j)] = v; };
  // d/dt is parallel; the fiber frame turns at fiber speed d2
  set(1, 2, d2 * kappa_alpha);
  set(2, 1, -d2 * kappa_alpha);
  set(2, 3, d2 * tau_alpha);
  set(3, 2, -d2 * tau_alpha);
  fr.tangent = FrameVector<double>(std::vector<double>{d1, d2, 0.0, 0.0});
  auto R = pair_curvature_action<double>([c](int a, int b) { return (a > 0 && b > 0) ? c : 0.0; }, fr.gram);
  return tension_field(fr, R, r);
}

RWModel RWModel::power_law(const Rational& lambda, int m, const Rational& c) {
  RWModel md;
  const double l = to_double(lambda);
  md.f = [l](double t) { return std::pow(t, l); };
  md.fp = [l](double t) { return l * std::pow(t, l - 1.0); };
  md.fpp = [l](double t) { return l * (l - 1.0) * std::pow(t, l - 2.0); };
  md.j_begin = 0.0;
  md.j_end = std::numeric_limits<double>::infinity();
  md.m = m;
  md.c = c;
  md.lambda = lambda;
  md.description = "t^(" + to_string(lambda) + ")";
  return md;
}

RWModel RWModel::exponential(double a, int m, const Rational& c) {
  RWModel md;
  md.f = [a](double t) { return std::exp(a * t); };
  md.fp = [a](double t) { return a * std::exp(a * t); };
  md.fpp = [a](double t) { return a * a * std::exp(a * t); };
  md.j_begin = -std::numeric_limits<double>::infinity();
  md.j_end = std::numeric_limits<double>::infinity();
  md.m = m;
  md.c = c;
  md.description = "exp(" + std::to_string(a) + "*t)";
  return md;
}

RWModel RWModel::cosh_model(int m, const Rational& c) {
  RWModel md;
  md.f = [](double t) { return std::cosh(t); };
  md.fp = [](double t) { return std::sinh(t); };
  md.fpp = [](double t) { return std::cosh(t); };
  md.j_begin = -std::numeric_limits<double>::infinity();
  md.j_end = std::numeric_limits<double>::infinity();
  md.m = m;
  md.c = c;
  md.description = "cosh(t)";
  return md;
}

double RWModel::deceleration(double t) const {
  const double d = fp(t);
  return -f(t) * fpp(t) / (d * d);
}

double rw_tension_normal(double kappa, int r, double f_ratio) {
  if (r < 2) throw std::invalid_argument("rw_tension_normal: needs r >= 2");
  return -std::pow(kappa, 2 * r - 3) * (kappa * kappa + (r - 1) * f_ratio);
}

Rational rw_tension_normal_scaled(const Rational& kappa_sq, int r, const Rational& rho) {
  if (r < 2) throw std::invalid_argument("rw_tension_normal: needs r >= 2");
  return -pow(kappa_sq, static_cast<unsigned>(r - 2)) * (kappa_sq + (r - 1) * rho);
}

RWCheck rw_r_harmonic_check(const RWModel& model, double t0, int r) {
  if (r < 2) throw std::invalid_argument("rw check: needs r >= 2");
  if (!model.contains(t0)) throw std::out_of_range("rw check: t0 is outside the interval J");
  const double f = model.f(t0), fp = model.fp(t0), fpp = model.fpp(t0);
  RWCheck out;
  out.kappa = std::abs(fp) / f;
  out.kappa_sq = out.kappa * out.kappa;
  out.d = 1.0 / f;
  out.condition = fp * fp + (r - 1) * f * fpp;
  const double scale = fp * fp + (r - 1) * std::abs(f * fpp);
  out.proper_r_harmonic = fp != 0.0 && std::abs(out.condition) <= 1e-12 * scale;
  return out;
}

RWCheck rw_r_harmonic_check(const RWModel& model, const Rational& t0, int r) {
  if (!model.lambda) return rw_r_harmonic_check(model, to_double(t0), r);
  if (r < 2) throw std::invalid_argument("rw check: needs r >= 2");
  if (sgn(t0) <= 0) throw std::out_of_range("rw check: t0 is outside the interval J");
  RWCheck out = rw_r_harmonic_check(model, to_double(t0), r);
  const Rational& l = *model.lambda;
  out.kappa_exact = abs(l) / t0;
  out.proper_r_harmonic = sgn(l) != 0 && sgn(power_law_condition(l, r)) == 0;
  return out;
}

Rational power_law_condition(const Rational& lambda, int r) { return lambda * lambda + (r - 1) * lambda * (lambda - 1); }

Rational power_law_deceleration(const Rational& lambda) {
  if (sgn(lambda) == 0) throw std::invalid_argument("deceleration: undefined for lambda = 0");
  return -(lambda - 1) / lambda;
}

RescalingCheck rw_rescaling_check(const RWModel& model, double t0, const std::vector<double>& beta_kappas, int r) {
  if (!model.contains(t0)) throw std::out_of_range("rescaling check: t0 is outside the interval J");
  if (std::abs(model.fp(t0)) > 1e-12) throw std::invalid_argument("rescaling check: needs f'(t0) = 0");
  const double f = model.f(t0);
  const double c = model.c.get_d();
  Helix beta;
  beta.sig.eps.assign(beta_kappas.size() + 1, 1);
  beta.sig.ambient_index = 0;
  beta.sig.ambient_dim = model.m - 1;
  beta.kappas = beta_kappas;
  Helix gamma = beta;
  for (double& k : gamma.kappas) k /= f;

  // the slice t = t0 is totally geodesic with sectional curvature c / f^2
  RescalingCheck out;
  out.gamma_coeffs = tension_field(gamma, c / (f * f), r).coeffs.coeffs;
  out.beta_coeffs = tension_field(beta, c, r).coeffs.coeffs;
  const double scale = std::pow(f, -2.0 * r);
  for (std::size_t i = 0; i < out.gamma_coeffs.size(); ++i) {
    const double lhs = out.gamma_coeffs[i] / f, rhs = scale * out.beta_coeffs[i];
    out.relation_error = std::max(out.relation_error, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  const double tol = 1e-9;
  out.beta_harmonic = max_abs(out.beta_coeffs) <= tol * std::max(1.0, max_abs(beta_kappas) * max_abs(beta_kappas));
  out.gamma_harmonic = max_abs(out.gamma_coeffs) <= tol * std::max(1.0, max_abs(beta_kappas) * max_abs(beta_kappas)) *
                                                       scale * f;
  return out;
}

CurvatureAction<double> rw_frame_curvature(const RWModel& model, double t0, std::vector<bool> vertical,
                                           std::vector<double> gram) {
  if (!model.contains(t0)) throw std::out_of_range("rw curvature: t0 is outside the interval J");
  if (vertical.size() != gram.size()) throw std::invalid_argument("rw curvature: flag and Gram sizes differ");
  const double f = model.f(t0), fp = model.fp(t0), fpp = model.fpp(t0);
  const double K = (fp * fp + model.c.get_d()) / (f * f), rho = fpp / f;
  return pair_curvature_action<double>(
      [vertical = std::move(vertical), K, rho](int a, int b) {
        const bool va = vertical[static_cast<std::size_t>(a)], vb = vertical[static_cast<std::size_t>(b)];
        if (va && vb) return 0.0;
        return va != vb ? rho : K;
      },
      std::move(gram));
}

CurvatureAction<Rational> rw_frame_curvature(const Rational& K, const Rational& rho, std::vector<bool> vertical,
                                             std::vector<Rational> gram) {
  if (vertical.size() != gram.size()) throw std::invalid_argument("rw curvature: flag and Gram sizes differ");
  return pair_curvature_action<Rational>(
      [vertical = std::move(vertical), K, rho](int a, int b) {
        const bool va = vertical[static_cast<std::size_t>(a)], vb = vertical[static_cast<std::size_t>(b)];
        if (va && vb) return Rational(0);
        return va != vb ? rho : K;
      },
      std::move(gram));
}

RWConnectionTerm rw_connection(const RWModel& model, double t0, bool x_vertical, bool y_vertical, double xy_inner) {
  if (!model.contains(t0)) throw std::out_of_range("rw connection: t0 is outside the interval J");
  const double h = model.fp(t0) / model.f(t0);
  RWConnectionTerm out;
  if (x_vertical && y_vertical) return out;
  if (x_vertical || y_vertical) {
    out.horizontal_scale = h;
    return out;
  }
  out.fiber_connection = true;
  out.vertical = xy_inner * h;
  return out;
}

TensionResult<Rational> rw_tension_oracle(const Rational& kappa_sq, const Rational& K, const Rational& rho, int r) {
  auto frame = scaled_frame<Rational>({1, -1}, {kappa_sq});
  auto R = rw_frame_curvature(K, rho, {false, true}, frame.gram);
  return tension_field(frame, R, r);
}

}  // namespace polyfrenet
