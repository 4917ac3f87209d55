#include "polyfrenet/ruled_surface.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyfrenet {

namespace odeint = boost::numeric::odeint;

namespace {

using Pair = std::array<double, 2>;

std::array<double, 5> profile_derivatives(double k, double kp) {
  const double k2 = -0.4 * k * k * k;
  const double k3 = -1.2 * k * k * kp;
  const double k4 = -1.2 * (2.0 * k * kp * kp + k * k * k2);
  return {k, kp, k2, k3, k4};
}

// Integrates k'' = -(2/5)k^3 over increasing u from (k, kp) at u = 0 and records at the given offsets.
void integrate_profile(double k, double kp, const std::vector<double>& offsets, const ProfileOptions& opt,
                       std::vector<Pair>& out) {
  Pair x{k, kp};
  auto rhs = [](const Pair& y, Pair& dy, double) {
    dy[0] = y[1];
    dy[1] = -0.4 * y[0] * y[0] * y[0];
  };
  out.clear();
  if (offsets.empty()) return;
  auto stepper = odeint::make_dense_output(opt.ode_abs, opt.ode_rel, odeint::runge_kutta_dopri5<Pair>());
  odeint::integrate_times(stepper, rhs, x, offsets.begin(), offsets.end(), 1e-3,
                          [&](const Pair& y, double) { out.push_back(y); });
}

}  // namespace

FirstFundamentalForm first_fundamental_form(double v, double k, double tau, int e1, int e2, int e3) {
  const double a = 1.0 - e1 * k * v;
  return {e1 * a * a + e3 * tau * tau * v * v, 0.0, static_cast<double>(e2)};
}

double gauss_curvature_along_gamma(double tau) { return tau * tau; }

double conservation_law(double k, double k_prime, double c1, double c2) {
  return 5.0 * k_prime * k_prime + k * k * k * k + 2.0 * c1 / k - c2;
}

std::vector<ProfileSample> solve_profile(double k0, const ProfileOptions& opt) {
  const double kmax = std::pow(0.5, 0.25);
  if (!(k0 > 0.0 && k0 < kmax)) throw std::invalid_argument("solve_profile: k0 must lie in (0, (1/2)^(1/4))");
  if (!(opt.s_end > opt.s_begin) || opt.s0 < opt.s_begin || opt.s0 > opt.s_end)
    throw std::invalid_argument("solve_profile: need s_begin <= s0 <= s_end with a non-empty range");
  if (opt.samples < 2) throw std::invalid_argument("solve_profile: need at least 2 samples");

  const double kp0 = std::sqrt((1.0 - k0 * k0 * k0 * k0) / 5.0);
  const double h = (opt.s_end - opt.s_begin) / (opt.samples - 1);
  std::vector<double> grid(static_cast<std::size_t>(opt.samples));
  for (int i = 0; i < opt.samples; ++i) grid[static_cast<std::size_t>(i)] = opt.s_begin + i * h;
  grid.back() = opt.s_end;

  // forward from s0 in s, backward as forward in u = s0 - s (k'' is even in the direction)
  std::vector<double> fwd{0.0}, bwd{0.0};
  for (double s : grid) {
    if (s > opt.s0) fwd.push_back(s - opt.s0);
    if (s < opt.s0) bwd.push_back(opt.s0 - s);
  }
  std::sort(bwd.begin(), bwd.end());
  std::vector<Pair> fsol, bsol;
  integrate_profile(k0, kp0, fwd, opt, fsol);
  integrate_profile(k0, -kp0, bwd, opt, bsol);

  std::vector<ProfileSample> out;
  for (std::size_t i = bsol.size(); i-- > 1;) out.push_back({opt.s0 - bwd[i], profile_derivatives(bsol[i][0], -bsol[i][1])});
  out.push_back({opt.s0, profile_derivatives(k0, kp0)});
  for (std::size_t i = 1; i < fsol.size(); ++i) out.push_back({opt.s0 + fwd[i], profile_derivatives(fsol[i][0], fsol[i][1])});
  return out;
}

double torsion_from_profile(double kbar, int e1, int e2) {
  const double k4 = kbar * kbar * kbar * kbar;
  const double num = 63.0 * (1.0 - 2.0 * k4);
  const double den = 10.0 * kbar * kbar * (e1 + 5 * e2);
  if (den == 0.0) throw std::domain_error("torsion_from_profile: zero denominator");
  if (std::abs(1.0 - 2.0 * k4) <= 8.0 * std::numeric_limits<double>::epsilon()) return 0.0;
  const double t = num / den;
  if (t < 0.0) throw std::domain_error("torsion_from_profile: tau^2 would be negative");
  return t;
}

std::array<double, 2> triharmonic_residual(const std::array<double, 5>& k, double tau_sq, int e1, int e2) {
  const double K = k[0], K1 = k[1], K2 = k[2], K3 = k[3], K4 = k[4];
  const double res1 = K3 * K + 2.0 * K * K * K * K1 + 2.0 * K1 * K2;
  const double res2 = (e1 * K2 - 2.0 * e2 * K * K * K) * tau_sq + K4 + 10.0 * K * K * K2 + 15.0 * K * K1 * K1 +
                      K * K * K * K * K;
  return {res1, res2};
}

RuledSurfaceData run_ruled_pipeline(const RuledOptions& opt) {
  const auto [e1, e2, e3] = opt.eps;
  const auto profile = solve_profile(opt.k0, opt.profile);

  // the admissible window is the run of samples around s0 with tau^2 above the floor
  auto tau_sq_or_neg = [&](double k) {
    try {
      return torsion_from_profile(k, e1, e2);
    } catch (const std::domain_error&) {
      return -1.0;
    }
  };
  std::size_t centre = 0;
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (std::abs(profile[i].s - opt.profile.s0) < std::abs(profile[centre].s - opt.profile.s0)) centre = i;
  if (!(tau_sq_or_neg(profile[centre].d[0]) > opt.tau_sq_floor))
    throw std::domain_error("ruled pipeline: tau^2 is not positive at s0 for this sign pattern");
  std::size_t lo = centre, hi = centre;
  while (lo > 0 && tau_sq_or_neg(profile[lo - 1].d[0]) > opt.tau_sq_floor) --lo;
  while (hi + 1 < profile.size() && tau_sq_or_neg(profile[hi + 1].d[0]) > opt.tau_sq_floor) ++hi;

  RuledSurfaceData out;
  out.eps = opt.eps;
  out.window_begin = profile[lo].s;
  out.window_end = profile[hi].s;
  double kmin = std::numeric_limits<double>::infinity(), kmax = -kmin;
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = lo; i <= hi; ++i) {
    RuledRow row;
    row.s = profile[i].s;
    row.k = profile[i].d;
    row.tau_sq = torsion_from_profile(row.k[0], e1, e2);
    row.conservation = conservation_law(row.k[0], row.k[1], 0.0, 1.0);
    row.residual = triharmonic_residual(row.k, row.tau_sq, e1, e2);
    out.max_conservation = std::max(out.max_conservation, std::abs(row.conservation));
    out.max_residual = std::max({out.max_residual, std::abs(row.residual[0]), std::abs(row.residual[1])});
    kmin = std::min(kmin, row.k[0]);
    kmax = std::max(kmax, row.k[0]);

    // E(v) = eps1 - 2k v + (eps1 k^2 + eps3 tau^2) v^2; nearest real root bounds the strip
    const double a = e1 * row.k[0] * row.k[0] + e3 * row.tau_sq, b = -2.0 * row.k[0], c = e1;
    if (a == 0.0) {
      margin = std::min(margin, std::abs(c / b));
    } else {
      const double disc = b * b - 4.0 * a * c;
      if (disc >= 0.0) {
        const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
        margin = std::min({margin, std::abs(q / a), q != 0.0 ? std::abs(c / q) : margin});
      }
    }
    out.rows.push_back(row);
  }
  out.k_range = kmax - kmin;
  out.delta = std::isfinite(margin) ? 0.5 * margin : 1.0;

  out.lorentz_strip = true;
  const int m = std::max(2, opt.strip_samples);
  for (const auto& row : out.rows) {
    const double tau = std::sqrt(row.tau_sq);
    for (int j = 0; j < m; ++j) {
      const double v = -out.delta + 2.0 * out.delta * j / (m - 1);
      const auto ff = first_fundamental_form(v, row.k[0], tau, e1, e2, e3);
      if (!(ff.E * ff.G < 0.0)) out.lorentz_strip = false;
    }
  }
  return out;
}

}  // namespace polyfrenet
