#include "polyfrenet/frenet.hpp"

#include <cmath>

namespace polyfrenet {

namespace {

void check_kappa_count(int n, std::size_t given) {
  if (n < 1) throw std::invalid_argument("helix: empty signature");
  if (given != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("helix: expected " + std::to_string(n - 1) + " curvatures, got " +
                                std::to_string(given));
}

int sign_power(int base, int exponent) { return (base < 0 && (exponent & 1)) ? -1 : 1; }

}  // namespace

void validate_helix(const Helix& h) {
  require_valid(h.sig);
  check_kappa_count(h.n(), h.kappas.size());
  for (std::size_t i = 0; i < h.kappas.size(); ++i) {
    const bool last_oriented = i + 1 == h.kappas.size() && h.n() == h.sig.ambient_dim;
    if (!(h.kappas[i] > 0.0) && !last_oriented)
      throw std::invalid_argument("helix: curvature k" + std::to_string(i + 1) + " must be positive");
  }
}

void validate_helix(const ExactHelix& h) {
  require_valid(h.sig);
  check_kappa_count(h.n(), h.kappa_sq.size());
  for (std::size_t i = 0; i < h.kappa_sq.size(); ++i)
    if (sgn(h.kappa_sq[i]) <= 0)
      throw std::invalid_argument("helix: squared curvature k" + std::to_string(i + 1) + "^2 must be positive");
}

CurvatureFunction constant_curvature(double value) {
  return [value](double, int order) { return order == 0 ? value : 0.0; };
}

CurvatureFunction polynomial_curvature(std::vector<double> coeffs) {
  return [coeffs = std::move(coeffs)](double s, int order) {
    double acc = 0.0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= order; --i) {
      double falling = 1.0;
      for (int j = 0; j < order; ++j) falling *= i - j;
      acc = acc * s + falling * coeffs[static_cast<std::size_t>(i)];
    }
    return acc;
  };
}

CurvatureFunction sine_curvature(double a, double b, double w, double phase) {
  return [=](double s, int order) {
    double x = w * s + phase;
    double wp = std::pow(w, order);
    double base = 0.0;
    switch (order % 4) {
      case 0: base = std::sin(x); break;
      case 1: base = std::cos(x); break;
      case 2: base = -std::sin(x); break;
      default: base = -std::cos(x); break;
    }
    return (order == 0 ? a : 0.0) + b * wp * base;
  };
}

FrenetCurve FrenetCurve::from_helix(const Helix& h) {
  FrenetCurve fc;
  fc.sig = h.sig;
  for (double k : h.kappas) fc.k.push_back(constant_curvature(k));
  return fc;
}

Eigen::MatrixXd omega_matrix(const Helix& h) {
  const int n = h.n();
  Eigen::MatrixXd om = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    double k = i < static_cast<int>(h.kappas.size()) ? h.kappas[static_cast<std::size_t>(i)] : 0.0;
    om(i, i + 1) = h.sig.eps[static_cast<std::size_t>(i + 1)] * k;
    om(i + 1, i) = -h.sig.eps[static_cast<std::size_t>(i)] * k;
  }
  return om;
}

Eigen::MatrixXd omega_matrix(const FrenetCurve& fc, double s) {
  Helix h{fc.sig, {}};
  for (const auto& k : fc.k) h.kappas.push_back(k(s, 0));
  return omega_matrix(h);
}

FrameAlgebra<double> unit_frame(const Helix& h) { return unit_frame<double>(h.sig.eps, h.kappas); }

FrameAlgebra<Rational> scaled_frame(const ExactHelix& h) { return scaled_frame<Rational>(h.sig.eps, h.kappa_sq); }

FrameVector<double> covariant_power(const Helix& h, int k) {
  if (k < 0) throw std::invalid_argument("covariant_power: negative order");
  return unit_frame(h).powers(k).back();
}

FrameVector<Rational> covariant_power(const ExactHelix& h, int k) {
  if (k < 0) throw std::invalid_argument("covariant_power: negative order");
  return scaled_frame(h).powers(k).back();
}

FrameVector<double> two_frenet_power(int ell, Parity parity, int e1, int e2, double kappa) {
  FrameVector<double> v(2);
  const double s = sign_power(-e1 * e2, ell);
  if (parity == Parity::even)
    v[0] = s * std::pow(kappa, 2 * ell);
  else
    v[1] = s * e2 * std::pow(kappa, 2 * ell + 1);
  return v;
}

FrameVector<Rational> two_frenet_power_scaled(int ell, Parity parity, int e1, int e2, const Rational& kappa_sq) {
  FrameVector<Rational> v(2);
  const int s = sign_power(-e1 * e2, ell);
  Rational p = pow(kappa_sq, static_cast<unsigned>(ell));
  if (parity == Parity::even)
    v[0] = s * p;
  else
    v[1] = s * e2 * p;
  return v;
}

ABCCoefficients<double> abc_coefficients(int ell, int e1, int e2, int e3, double kappa, double tau) {
  if (ell < 0) throw std::invalid_argument("abc_coefficients: negative index");
  const double x = e1 * kappa * kappa + e3 * tau * tau;
  const double sl = sign_power(-1, ell);
  const double e2l = sign_power(e2, ell);
  ABCCoefficients<double> out{1.0, 0.0, 0.0};
  if (ell > 0) {
    out.A = sl * e1 * e2l * kappa * kappa * std::pow(x, ell - 1);
    out.B = -sl * e3 * e2l * kappa * tau * std::pow(x, ell - 1);
  }
  out.C = sl * e2l * e2 * kappa * std::pow(x, ell);
  return out;
}

ABCCoefficients<Rational> abc_coefficients_scaled(int ell, int e1, int e2, int e3, const Rational& kappa_sq,
                                                  const Rational& tau_sq) {
  if (ell < 0) throw std::invalid_argument("abc_coefficients: negative index");
  const Rational x = e1 * kappa_sq + e3 * tau_sq;
  const int sl = sign_power(-1, ell);
  const int e2l = sign_power(e2, ell);
  ABCCoefficients<Rational> out{Rational(1), Rational(0), Rational(0)};
  if (ell > 0) {
    Rational xp = pow(x, static_cast<unsigned>(ell - 1));
    out.A = sl * e1 * e2l * kappa_sq * xp;
    out.B = -sl * e3 * e2l * xp;
  }
  out.C = sl * e2l * e2 * pow(x, static_cast<unsigned>(ell));
  return out;
}

}  // namespace polyfrenet

namespace polyfrenet {

namespace {

// Truncated power series in h, all of the same length.
using Series = std::vector<double>;

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_derivative(const Series& a) {
  Series out(a.size(), 0.0);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = static_cast<double>(i) * a[i];
  return out;
}

}  // namespace

std::vector<FrameVector<double>> covariant_powers_along(const FrenetCurve& fc, double s, int kmax) {
  if (kmax < 0) throw std::invalid_argument("covariant_powers_along: negative order");
  const int n = fc.n();
  if (static_cast<int>(fc.k.size()) != n - 1)
    throw std::invalid_argument("covariant_powers_along: expected " + std::to_string(n - 1) + " curvature functions");
  const std::size_t len = static_cast<std::size_t>(kmax + 1);

  // Taylor coefficients of each curvature around s.
  std::vector<Series> kser;
  for (const auto& k : fc.k) {
    Series ser(len, 0.0);
    double fact = 1.0;
    for (std::size_t j = 0; j + 1 < len; ++j) {
      if (j > 0) fact *= static_cast<double>(j);
      ser[j] = k(s, static_cast<int>(j)) / fact;
    }
    if (len == 1) ser[0] = k(s, 0);
    kser.push_back(std::move(ser));
  }
  const auto& eps = fc.sig.eps;

  std::vector<std::vector<Series>> v(1, std::vector<Series>(static_cast<std::size_t>(n), Series(len, 0.0)));
  v[0][0][0] = 1.0;
  for (int step = 1; step <= kmax; ++step) {
    const auto& prev = v.back();
    std::vector<Series> next(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) next[static_cast<std::size_t>(j)] = series_derivative(prev[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i) {
      const Series& vi = prev[static_cast<std::size_t>(i)];
      if (i + 1 < n) {
        Series t = series_mul(vi, kser[static_cast<std::size_t>(i)]);
        for (std::size_t q = 0; q < len; ++q) next[static_cast<std::size_t>(i + 1)][q] += eps[static_cast<std::size_t>(i + 1)] * t[q];
      }
      if (i > 0) {
        Series t = series_mul(vi, kser[static_cast<std::size_t>(i - 1)]);
        for (std::size_t q = 0; q < len; ++q) next[static_cast<std::size_t>(i - 1)][q] -= eps[static_cast<std::size_t>(i - 1)] * t[q];
      }
    }
    v.push_back(std::move(next));
  }

  std::vector<FrameVector<double>> out;
  for (const auto& vk : v) {
    FrameVector<double> f(n);
    for (int j = 0; j < n; ++j) f[j] = vk[static_cast<std::size_t>(j)][0];
    out.push_back(f);
  }
  return out;
}

}  // namespace polyfrenet
