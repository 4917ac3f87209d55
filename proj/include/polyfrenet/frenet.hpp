#pragma once

// Frenet systems and exact recursions for the covariant powers of T along a
// helix, all expressed as coefficient vectors on a frame (never in ambient
// coordinates).
//
// Two frames are used. The unit frame F_1..F_n has <F_i,F_i> = eps_i. The
// scaled frame G_i = k_1 ... k_{i-1} F_i has <G_i,G_i> = eps_i k_1^2 ... k_{i-1}^2
// and derivative rule G_i' = -eps_{i-1} k_{i-1}^2 G_{i-1} + eps_{i+1} G_{i+1},
// so every coefficient is a polynomial in the squared curvatures. That is what
// lets the classification sweeps run in exact rational or integer arithmetic.

#include "polyfrenet/exact.hpp"
#include "polyfrenet/metric.hpp"

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfrenet {

template <class S>
struct FrameVector {
  std::vector<S> coeffs;

  FrameVector() = default;
  explicit FrameVector(int n) : coeffs(static_cast<std::size_t>(n), S(0)) {}
  explicit FrameVector(std::vector<S> c) : coeffs(std::move(c)) {}

  static FrameVector basis(int n, int i) {
    FrameVector v(n);
    v.coeffs[static_cast<std::size_t>(i)] = S(1);
    return v;
  }

  int size() const { return static_cast<int>(coeffs.size()); }
  S& operator[](int i) { return coeffs[static_cast<std::size_t>(i)]; }
  const S& operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }

  FrameVector& operator+=(const FrameVector& o) {
    check(o);
    for (int i = 0; i < size(); ++i) (*this)[i] += o[i];
    return *this;
  }
  FrameVector& operator-=(const FrameVector& o) {
    check(o);
    for (int i = 0; i < size(); ++i) (*this)[i] -= o[i];
    return *this;
  }
  FrameVector& operator*=(const S& a) {
    for (auto& x : coeffs) x *= a;
    return *this;
  }
  friend FrameVector operator+(FrameVector a, const FrameVector& b) { return a += b; }
  friend FrameVector operator-(FrameVector a, const FrameVector& b) { return a -= b; }
  friend FrameVector operator*(const S& s, FrameVector a) { return a *= s; }
  friend bool operator==(const FrameVector& a, const FrameVector& b) { return a.coeffs == b.coeffs; }

 private:
  void check(const FrameVector& o) const {
    if (o.size() != size()) throw std::invalid_argument("FrameVector: length mismatch");
  }
};

/// Constant-curvature Frenet curve. kappas[i] is k_{i+1}.
struct Helix {
  Signature sig;
  std::vector<double> kappas;

  int n() const { return sig.n(); }
};

/// Helix given by squared curvatures, for exact arithmetic.
struct ExactHelix {
  Signature sig;
  std::vector<Rational> kappa_sq;

  int n() const { return sig.n(); }
};

void validate_helix(const Helix& h);
void validate_helix(const ExactHelix& h);

/// k^(order)(s) for order 0..4 at least.
using CurvatureFunction = std::function<double(double s, int order)>;

CurvatureFunction constant_curvature(double value);
/// a0 + a1 s + a2 s^2 + ...
CurvatureFunction polynomial_curvature(std::vector<double> coeffs);
/// a + b sin(w s + phase)
CurvatureFunction sine_curvature(double a, double b, double w, double phase = 0.0);

struct FrenetCurve {
  Signature sig;
  std::vector<CurvatureFunction> k;

  int n() const { return sig.n(); }
  static FrenetCurve from_helix(const Helix& h);
};

Eigen::MatrixXd omega_matrix(const Helix& h);
Eigen::MatrixXd omega_matrix(const FrenetCurve& fc, double s);

/// A frame (unit or scaled) with constant derivative rule G_i' = sum_j conn(i,j) G_j
/// and diagonal Gram matrix. tangent holds the coefficients of T.
template <class S>
struct FrameAlgebra {
  int n = 0;
  std::vector<int> eps;
  std::vector<S> gram;
  std::vector<S> conn;  // row-major n x n
  FrameVector<S> tangent;

  const S& connection(int i, int j) const { return conn[static_cast<std::size_t>(i * n + j)]; }

  /// Coefficients of the derivative of sum_i v_i G_i, i.e. the row vector v * conn.
  FrameVector<S> derivative(const FrameVector<S>& v) const {
    FrameVector<S> out(n);
    for (int i = 0; i < n; ++i) {
      if (is_zero(v[i])) continue;
      for (int j = 0; j < n; ++j) {
        const S& w = connection(i, j);
        if (!is_zero(w)) out[j] += v[i] * w;
      }
    }
    return out;
  }

  S inner(const FrameVector<S>& a, const FrameVector<S>& b) const {
    S acc(0);
    for (int i = 0; i < n; ++i)
      if (!is_zero(a[i]) && !is_zero(b[i])) acc += a[i] * b[i] * gram[static_cast<std::size_t>(i)];
    return acc;
  }

  /// The vector sum_i v_i G_i is zero iff every coefficient sitting on a non-null G_i vanishes.
  bool vanishes(const FrameVector<S>& v) const {
    for (int i = 0; i < n; ++i)
      if (!is_zero(v[i]) && !is_zero(gram[static_cast<std::size_t>(i)])) return false;
    return true;
  }

  /// V_0 = T, ..., V_kmax = (nabla_T)^kmax T.
  std::vector<FrameVector<S>> powers(int kmax) const {
    std::vector<FrameVector<S>> out;
    out.reserve(static_cast<std::size_t>(kmax + 1));
    out.push_back(tangent);
    for (int k = 1; k <= kmax; ++k) out.push_back(derivative(out.back()));
    return out;
  }
};

namespace detail {
template <class S>
FrameAlgebra<S> tridiagonal_frame(const std::vector<int>& eps, const std::vector<S>& lower, const std::vector<S>& upper,
                                  std::vector<S> gram) {
  const int n = static_cast<int>(eps.size());
  FrameAlgebra<S> a;
  a.n = n;
  a.eps = eps;
  a.gram = std::move(gram);
  a.conn.assign(static_cast<std::size_t>(n * n), S(0));
  for (int i = 0; i < n; ++i) {
    if (i > 0) a.conn[static_cast<std::size_t>(i * n + i - 1)] = lower[static_cast<std::size_t>(i)];
    if (i + 1 < n) a.conn[static_cast<std::size_t>(i * n + i + 1)] = upper[static_cast<std::size_t>(i)];
  }
  a.tangent = FrameVector<S>::basis(n, 0);
  return a;
}
}  // namespace detail

/// Unit frame F_1..F_n; kappas[i] = k_{i+1}. Missing trailing curvatures count as zero.
template <class S>
FrameAlgebra<S> unit_frame(const std::vector<int>& eps, const std::vector<S>& kappas) {
  const int n = static_cast<int>(eps.size());
  auto kap = [&](int i) { return i < static_cast<int>(kappas.size()) ? kappas[static_cast<std::size_t>(i)] : S(0); };
  std::vector<S> lower(static_cast<std::size_t>(n), S(0)), upper(static_cast<std::size_t>(n), S(0)), gram;
  for (int i = 0; i < n; ++i) {
    if (i > 0) lower[static_cast<std::size_t>(i)] = S(-eps[static_cast<std::size_t>(i - 1)]) * kap(i - 1);
    if (i + 1 < n) upper[static_cast<std::size_t>(i)] = S(eps[static_cast<std::size_t>(i + 1)]) * kap(i);
    gram.push_back(S(eps[static_cast<std::size_t>(i)]));
  }
  return detail::tridiagonal_frame(eps, lower, upper, std::move(gram));
}

/// Scaled frame G_i = k_1...k_{i-1} F_i; kappa_sq[i] = k_{i+1}^2.
template <class S>
FrameAlgebra<S> scaled_frame(const std::vector<int>& eps, const std::vector<S>& kappa_sq) {
  const int n = static_cast<int>(eps.size());
  auto ksq = [&](int i) {
    return i < static_cast<int>(kappa_sq.size()) ? kappa_sq[static_cast<std::size_t>(i)] : S(0);
  };
  std::vector<S> lower(static_cast<std::size_t>(n), S(0)), upper(static_cast<std::size_t>(n), S(0)), gram;
  S p(1);
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      lower[static_cast<std::size_t>(i)] = S(-eps[static_cast<std::size_t>(i - 1)]) * ksq(i - 1);
      p = p * ksq(i - 1);
    }
    if (i + 1 < n) upper[static_cast<std::size_t>(i)] = S(eps[static_cast<std::size_t>(i + 1)]);
    gram.push_back(S(eps[static_cast<std::size_t>(i)]) * p);
  }
  return detail::tridiagonal_frame(eps, lower, upper, std::move(gram));
}

/// (nabla_T)^k T for k = 0..kmax at arc length s on the unit frame of a curve with
/// non-constant curvatures. Uses truncated Taylor expansions of the curvature
/// functions, so it needs k_i derivatives up to order kmax - 1 and is exact in structure.
std::vector<FrameVector<double>> covariant_powers_along(const FrenetCurve& fc, double s, int kmax);

FrameAlgebra<double> unit_frame(const Helix& h);
FrameAlgebra<Rational> scaled_frame(const ExactHelix& h);

/// Coefficients of (nabla_T)^k T on the unit frame of a helix.
FrameVector<double> covariant_power(const Helix& h, int k);
/// Same on the scaled frame, exact.
FrameVector<Rational> covariant_power(const ExactHelix& h, int k);

enum class Parity { even, odd };

/// Closed form for n = 2: (nabla_T)^{2l} T = (-e1 e2)^l k^{2l} T and
/// (nabla_T)^{2l+1} T = (-e1 e2)^l e2 k^{2l+1} N, as a unit-frame vector.
FrameVector<double> two_frenet_power(int ell, Parity parity, int e1, int e2, double kappa);
/// Scaled-frame version (N replaced by G_2 = k N), in terms of k^2.
FrameVector<Rational> two_frenet_power_scaled(int ell, Parity parity, int e1, int e2, const Rational& kappa_sq);

template <class S>
struct ABCCoefficients {
  S A;
  S B;
  S C;
};

/// For n = 3: (nabla_T)^{2l} T = A_l T + B_l B and (nabla_T)^{2l+1} T = C_l N.
ABCCoefficients<double> abc_coefficients(int ell, int e1, int e2, int e3, double kappa, double tau);
/// The same coefficients on the scaled frame: A_l on G_1, B_l/(k tau) on G_3, C_l/k on G_2.
ABCCoefficients<Rational> abc_coefficients_scaled(int ell, int e1, int e2, int e3, const Rational& kappa_sq,
                                                  const Rational& tau_sq);

}  // namespace polyfrenet
