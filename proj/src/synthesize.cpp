#include "polyfrenet/synthesize.hpp"

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace polyfrenet {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::vector<double>;

std::vector<double> sample_grid(const SynthesisProblem& p) {
  if (!p.grid.empty()) {
    if (!std::is_sorted(p.grid.begin(), p.grid.end()) ||
        std::adjacent_find(p.grid.begin(), p.grid.end()) != p.grid.end())
      throw std::invalid_argument("synthesis: sample grid must be strictly increasing");
    return p.grid;
  }
  if (!(p.s_end > p.s_begin)) throw std::invalid_argument("synthesis: s range must be non-empty");
  if (p.samples < 2) throw std::invalid_argument("synthesis: need at least 2 samples");
  std::vector<double> g(static_cast<std::size_t>(p.samples));
  const double h = (p.s_end - p.s_begin) / (p.samples - 1);
  for (int i = 0; i < p.samples; ++i) g[static_cast<std::size_t>(i)] = p.s_begin + i * h;
  g.back() = p.s_end;
  return g;
}

void check_problem(const SynthesisProblem& p) {
  if (!p.geometry) throw std::invalid_argument("synthesis: no geometry");
  const int n = p.fc.n();
  const int dim = p.geometry->chart_dim();
  if (static_cast<int>(p.fc.k.size()) != n - 1)
    throw std::invalid_argument("synthesis: expected " + std::to_string(n - 1) + " curvature functions");
  if (static_cast<int>(p.initial_frame.size()) != n)
    throw std::invalid_argument("synthesis: initial frame must have " + std::to_string(n) + " vectors");
  if (p.initial_point.size() != dim) throw std::invalid_argument("synthesis: initial point has wrong dimension");
  for (const auto& f : p.initial_frame)
    if (f.size() != dim) throw std::invalid_argument("synthesis: frame vector has wrong dimension");
  const double odef = orthonormality_defect(p.initial_frame, p.fc.sig.eps, p.geometry->form());
  if (odef > 1e-9)
    throw std::invalid_argument("synthesis: initial frame is not orthonormal with the requested signs (defect " +
                                std::to_string(odef) + ")");
  const double mdef = std::max(p.geometry->defect(p.initial_point),
                               p.geometry->tangency_defect(p.initial_point, p.initial_frame));
  if (mdef > 1e-9) throw std::invalid_argument("synthesis: initial data are not on the model");
}

void unpack(const State& x, int dim, int n, CoordVector& point, std::vector<CoordVector>& frame) {
  point = Eigen::Map<const CoordVector>(x.data(), dim);
  frame.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    frame[static_cast<std::size_t>(i)] = Eigen::Map<const CoordVector>(x.data() + (i + 1) * dim, dim);
}

// Derivative weights at offset o of the interpolating polynomial through nodes 0..4 (unit spacing).
std::array<double, 5> lagrange_derivative_weights(double o) {
  std::array<double, 5> w{};
  for (int a = 0; a < 5; ++a) {
    double num = 0.0, den = 1.0;
    for (int q = 0; q < 5; ++q) {
      if (q == a) continue;
      den *= a - q;
      double prod = 1.0;
      for (int u = 0; u < 5; ++u)
        if (u != a && u != q) prod *= o - u;
      num += prod;
    }
    w[static_cast<std::size_t>(a)] = num / den;
  }
  return w;
}

State pack(const CoordVector& point, const std::vector<CoordVector>& frame) {
  const auto dim = static_cast<std::size_t>(point.size());
  State x(dim * (frame.size() + 1));
  std::copy(point.data(), point.data() + dim, x.begin());
  for (std::size_t i = 0; i < frame.size(); ++i)
    std::copy(frame[i].data(), frame[i].data() + dim, x.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim));
  return x;
}

}  // namespace

DriftExceeded::DriftExceeded(double s, double drift, double defect)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "synthesis: drift bound exceeded at s = " << s << " (orthonormality drift " << drift
           << ", model defect " << defect << ")";
        return os.str();
      }()),
      s_(s),
      drift_(drift),
      defect_(defect) {}

void auto_initial_data(SynthesisProblem& p) {
  if (!p.geometry) throw std::invalid_argument("synthesis: no geometry");
  p.geometry->initial_data(p.fc.sig.eps, p.initial_point, p.initial_frame);
}

CurveSolution integrate_frenet(const SynthesisProblem& p) {
  check_problem(p);
  const auto& geo = *p.geometry;
  const int n = p.fc.n();
  const int dim = geo.chart_dim();
  const auto& eps = p.fc.sig.eps;
  const auto grid = sample_grid(p);
  const BilinearForm form = geo.form();

  auto rhs = [&](const State& x, State& dxds, double s) {
    dxds.assign(x.size(), 0.0);
    Eigen::Map<const CoordVector> point(x.data(), dim);
    auto F = [&](int i) { return Eigen::Map<const CoordVector>(x.data() + (i + 1) * dim, dim); };
    Eigen::Map<CoordVector>(dxds.data(), dim) = F(0);
    const CoordVector T = F(0);
    const CoordVector pt = point;
    for (int i = 0; i < n; ++i) {
      Eigen::Map<CoordVector> out(dxds.data() + (i + 1) * dim, dim);
      if (i + 1 < n) out += (eps[static_cast<std::size_t>(i + 1)] * p.fc.k[static_cast<std::size_t>(i)](s, 0)) * F(i + 1);
      if (i > 0) out -= (eps[static_cast<std::size_t>(i - 1)] * p.fc.k[static_cast<std::size_t>(i - 1)](s, 0)) * F(i - 1);
      out += geo.second_fundamental(pt, T, F(i));
    }
  };

  CurveSolution sol;
  sol.eps = eps;
  auto record = [&](const State& x, double s) {
    CurveSample smp;
    smp.s = s;
    unpack(x, dim, n, smp.point, smp.frame);
    smp.drift = orthonormality_defect(smp.frame, eps, form);
    smp.defect = std::max(geo.defect(smp.point), geo.tangency_defect(smp.point, smp.frame));
    sol.max_drift = std::max(sol.max_drift, smp.drift);
    sol.max_defect = std::max(sol.max_defect, smp.defect);
    const bool bad = !(smp.drift <= p.tol.drift_max) || !(smp.defect <= p.tol.drift_max);
    sol.samples.push_back(std::move(smp));
    if (bad) throw DriftExceeded(s, sol.samples.back().drift, sol.samples.back().defect);
  };

  State x = pack(p.initial_point, p.initial_frame);
  const std::size_t chunk =
      p.reorthonormalize_every > 0 ? static_cast<std::size_t>(p.reorthonormalize_every) : grid.size();
  std::size_t start = 0;
  while (true) {
    const std::size_t stop = std::min(grid.size() - 1, start + chunk);
    const bool first = start == 0;
    const double dt0 = std::min(1e-3, grid[stop] > grid[start] ? grid[stop] - grid[start] : 1e-3);
    auto stepper = odeint::make_dense_output(p.tol.ode_abs, p.tol.ode_rel, odeint::runge_kutta_dopri5<State>());
    bool skip = !first;  // the chunk's first time was recorded by the previous chunk
    odeint::integrate_times(stepper, rhs, x, grid.begin() + static_cast<std::ptrdiff_t>(start),
                            grid.begin() + static_cast<std::ptrdiff_t>(stop + 1), dt0,
                            [&](const State& st, double s) {
                              if (skip) {
                                skip = false;
                                return;
                              }
                              record(st, s);
                            });
    if (stop + 1 >= grid.size()) break;
    CoordVector point;
    std::vector<CoordVector> frame;
    unpack(x, dim, n, point, frame);
    auto fixed = gram_schmidt_nondegenerate(frame, form);
    double corr = 0.0;
    for (int i = 0; i < n; ++i)
      corr = std::max(corr, (fixed.frame[static_cast<std::size_t>(i)] - frame[static_cast<std::size_t>(i)])
                                .cwiseAbs()
                                .maxCoeff());
    sol.reorthonormalizations.push_back({grid[stop], corr});
    x = pack(point, fixed.frame);
    start = stop;
  }
  return sol;
}

double orthonormality_drift(const CurveSolution& sol, const EmbeddedModel& geometry) {
  double worst = 0.0;
  const BilinearForm form = geometry.form();
  for (const auto& smp : sol.samples) worst = std::max(worst, orthonormality_defect(smp.frame, sol.eps, form));
  return worst;
}

double helix_tension_residual(const Helix& h, const CurvatureAction<double>& R, int r) {
  auto res = tension_field(unit_frame(h), R, r);
  double worst = 0.0;
  for (double v : res.coeffs.coeffs) worst = std::max(worst, std::abs(v));
  return worst;
}

double helix_tension_residual(const Helix& h, double c, int r) {
  auto res = tension_field(h, c, r);
  double worst = 0.0;
  for (double v : res.coeffs.coeffs) worst = std::max(worst, std::abs(v));
  return worst;
}

std::vector<double> numeric_tension(const CurveSolution& sol, const FrenetCurve& fc, const EmbeddedModel& geometry,
                                    int r) {
  detail::check_order(r);
  if (sol.samples.empty()) throw std::invalid_argument("numeric_tension: empty solution");
  const int n = fc.n();
  if (static_cast<int>(sol.samples.front().frame.size()) != n)
    throw std::invalid_argument("numeric_tension: frame size does not match the curve");
  std::vector<double> out;
  out.reserve(sol.samples.size());
  for (const auto& smp : sol.samples) {
    const auto V = covariant_powers_along(fc, smp.s, 2 * r - 1);
    std::vector<CoordVector> W;
    for (const auto& v : V) {
      CoordVector w = CoordVector::Zero(smp.point.size());
      for (int i = 0; i < n; ++i) w += v[i] * smp.frame[static_cast<std::size_t>(i)];
      W.push_back(std::move(w));
    }
    CoordVector tau = W[static_cast<std::size_t>(2 * r - 1)];
    for (int l = 0; l <= r - 2; ++l) {
      CoordVector term = geometry.curvature(smp.point, W[static_cast<std::size_t>(2 * r - 3 - l)],
                                            W[static_cast<std::size_t>(l)], W[0]);
      if (l % 2 == 0)
        tau += term;
      else
        tau -= term;
    }
    out.push_back(tau.cwiseAbs().maxCoeff());
  }
  return out;
}

FrenetAnalysis frenet_analysis(const CurveSolution& sol, const EmbeddedModel& geometry) {
  const std::size_t N = sol.samples.size();
  if (N < 5) throw std::invalid_argument("frenet_analysis: need at least 5 samples");
  const double h = sol.samples[1].s - sol.samples[0].s;
  for (std::size_t j = 1; j < N; ++j)
    if (std::abs(sol.samples[j].s - sol.samples[j - 1].s - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw std::invalid_argument("frenet_analysis: grid must be uniform");
  const int n = static_cast<int>(sol.eps.size());

  auto frame_at = [&](std::size_t j, int i) -> const CoordVector& {
    return sol.samples[j].frame[static_cast<std::size_t>(i)];
  };
  auto derivative = [&](std::size_t j, int i) {
    if (j >= 2 && j + 2 < N)
      return CoordVector((frame_at(j - 2, i) - 8.0 * frame_at(j - 1, i) + 8.0 * frame_at(j + 1, i) -
                          frame_at(j + 2, i)) /
                         (12.0 * h));
    // one-sided 5-point stencils at the ends
    const std::size_t b = j < 2 ? 0 : N - 5;
    const auto w = lagrange_derivative_weights(static_cast<double>(j - b));
    CoordVector d = CoordVector::Zero(frame_at(0, i).size());
    for (int a = 0; a < 5; ++a) d += w[static_cast<std::size_t>(a)] * frame_at(b + static_cast<std::size_t>(a), i);
    return CoordVector(d / h);
  };

  FrenetAnalysis out;
  out.k.assign(static_cast<std::size_t>(n - 1), std::vector<double>(N));
  for (std::size_t j = 0; j < N; ++j) {
    out.s.push_back(sol.samples[j].s);
    for (int i = 0; i + 1 < n; ++i)
      out.k[static_cast<std::size_t>(i)][j] =
          sol.eps[static_cast<std::size_t>(i + 1)] * geometry.inner(derivative(j, i), frame_at(j, i + 1));
  }
  return out;
}

FrenetCurve curve_from_analysis(const FrenetAnalysis& a, const Signature& sig) {
  if (a.s.size() < 5) throw std::invalid_argument("curve_from_analysis: need at least 5 samples");
  if (static_cast<int>(a.k.size()) != sig.n() - 1)
    throw std::invalid_argument("curve_from_analysis: curvature count does not match the signature");
  const double h = a.s[1] - a.s[0];
  FrenetCurve fc;
  fc.sig = sig;
  for (const auto& ki : a.k) {
    auto spline = std::make_shared<boost::math::interpolators::cardinal_cubic_b_spline<double>>(ki.begin(), ki.end(),
                                                                                               a.s.front(), h);
    fc.k.push_back([spline](double s, int order) {
      switch (order) {
        case 0: return (*spline)(s);
        case 1: return spline->prime(s);
        case 2: return spline->double_prime(s);
        default: return 0.0;
      }
    });
  }
  return fc;
}

double max_point_distance(const CurveSolution& a, const CurveSolution& b) {
  if (a.samples.size() != b.samples.size()) throw std::invalid_argument("max_point_distance: sample counts differ");
  double worst = 0.0;
  for (std::size_t j = 0; j < a.samples.size(); ++j)
    worst = std::max(worst, (a.samples[j].point - b.samples[j].point).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace polyfrenet
