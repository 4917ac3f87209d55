#pragma once

// r-tension field of a curve,
//   tau_r = (nabla_T)^{2r-1} T + sum_{l=0}^{r-2} (-1)^l R((nabla_T)^{2r-3-l} T, (nabla_T)^l T) T,
// evaluated on frame coefficients with R expanded bilinearly through a curvature
// action table, plus closed-form bitension/tritension expressions used as
// cross-checks.

#include "polyfrenet/frenet.hpp"
#include "polyfrenet/space_forms.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace polyfrenet {

template <class S>
struct TensionResult {
  FrameVector<S> coeffs;
  int r = 0;
  std::vector<S> gram;  // Gram diagonal of the frame the coefficients live on

  bool vanishes() const {
    for (int i = 0; i < coeffs.size(); ++i)
      if (!is_zero(coeffs[i]) && !is_zero(gram[static_cast<std::size_t>(i)])) return false;
    return true;
  }
};

namespace detail {
inline void check_order(int r) {
  if (r < 1) throw std::invalid_argument("tension field: order r must be at least 1");
}
}  // namespace detail

/// Combines precomputed powers V_k = (nabla_T)^k T (k <= 2r-1) with the curvature action.
template <class S>
TensionResult<S> tension_from_powers(const std::vector<FrameVector<S>>& V, const std::vector<S>& gram,
                                     const CurvatureAction<S>& R, int r) {
  detail::check_order(r);
  if (static_cast<int>(V.size()) < 2 * r) throw std::invalid_argument("tension field: not enough covariant powers");
  const int n = V[0].size();
  const auto& T = V[0];

  // slice[a][b] = R(G_a, G_b) T, built only when some term needs it
  std::vector<std::vector<FrameVector<S>>> slice(static_cast<std::size_t>(n),
                                                 std::vector<FrameVector<S>>(static_cast<std::size_t>(n)));
  std::vector<std::vector<bool>> ready(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  auto R_T = [&](int a, int b) -> const FrameVector<S>& {
    auto& cell = slice[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    if (!ready[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
      cell = FrameVector<S>(n);
      for (int c = 0; c < n; ++c)
        if (!is_zero(T[c])) cell += T[c] * R(a, b, c);
      ready[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    }
    return cell;
  };

  TensionResult<S> out{V[static_cast<std::size_t>(2 * r - 1)], r, gram};
  for (int l = 0; l <= r - 2; ++l) {
    const auto& X = V[static_cast<std::size_t>(2 * r - 3 - l)];
    const auto& Y = V[static_cast<std::size_t>(l)];
    FrameVector<S> term(n);
    for (int a = 0; a < n; ++a) {
      if (is_zero(X[a])) continue;
      for (int b = 0; b < n; ++b) {
        if (is_zero(Y[b]) || a == b) continue;
        S xy = X[a] * Y[b];
        term += xy * R_T(a, b);
      }
    }
    if (l % 2 == 0)
      out.coeffs += term;
    else
      out.coeffs -= term;
  }
  return out;
}

/// Generic oracle: any frame algebra, any curvature action on that frame.
template <class S>
TensionResult<S> tension_field(const FrameAlgebra<S>& frame, const CurvatureAction<S>& R, int r) {
  detail::check_order(r);
  return tension_from_powers(frame.powers(2 * r - 1), frame.gram, R, r);
}

/// tau_r split as free + c * curved on a space form, where R(X,Y)T = c(<Y,T>X - <X,T>Y)
/// is applied through the frame's Gram matrix. Linear in c, so one split serves every c.
template <class S>
struct SpaceFormTension {
  FrameVector<S> free;
  FrameVector<S> curved;
  int r = 0;
  std::vector<S> gram;

  TensionResult<S> at(const S& c) const {
    TensionResult<S> out{free, r, gram};
    out.coeffs += c * curved;
    return out;
  }
};

template <class S>
SpaceFormTension<S> space_form_tension_split(const FrameAlgebra<S>& frame, int r) {
  detail::check_order(r);
  const auto V = frame.powers(2 * r - 1);
  const auto& T = frame.tangent;
  SpaceFormTension<S> out{V[static_cast<std::size_t>(2 * r - 1)], FrameVector<S>(frame.n), r, frame.gram};
  for (int l = 0; l <= r - 2; ++l) {
    const auto& X = V[static_cast<std::size_t>(2 * r - 3 - l)];
    const auto& Y = V[static_cast<std::size_t>(l)];
    FrameVector<S> term = frame.inner(Y, T) * X;
    term -= frame.inner(X, T) * Y;
    if (l % 2 == 0)
      out.curved += term;
    else
      out.curved -= term;
  }
  return out;
}

template <class S>
TensionResult<S> space_form_tension(const FrameAlgebra<S>& frame, const S& c, int r) {
  return space_form_tension_split(frame, r).at(c);
}

/// Unit-frame tension of a helix in a space form (floating point).
TensionResult<double> tension_field(const Helix& h, double c, int r);
/// Scaled-frame tension of a helix in a space form (exact).
TensionResult<Rational> tension_field(const ExactHelix& h, const Rational& c, int r);

/// Tension of a curve with non-constant curvatures at arc length s, given the
/// curvature action on its unit frame at that point.
TensionResult<double> tension_field_along(const FrenetCurve& fc, double s, const CurvatureAction<double>& R, int r);

/// Curve on a surface with Gaussian curvature K_M along it; eps1*eps2 = -1.
template <class S>
std::array<S, 2> surface_bitension(const S& k, const S& k1, const S& k2, const S& K_M, int e1, int e2) {
  const S e12 = S(e1 * e2);
  return {S(-3) * e12 * k * k1, S(e2) * (K_M * S(e1) * k + k2 - e12 * k * k * k)};
}

template <class S>
std::array<S, 2> surface_tritension(const S& k, const S& k1, const S& k2, const S& k3, const S& k4, const S& K_M,
                                    int e1, int e2) {
  const S E1(e1), E2(e2), e12(e1 * e2);
  S tangent = S(-5) * e12 * k3 * k + S(10) * k * k * k * k1 - S(10) * e12 * k1 * k2;
  S normal = E2 * K_M * (E1 * k2 - S(2) * E2 * k * k * k) + E2 * k4 - S(10) * E1 * k * k * k2 -
             S(15) * E1 * k * k1 * k1 + E2 * k * k * k * k * k;
  return {tangent, normal};
}

/// Local data of an n-Frenet curve at a point: curvatures and the derivatives the bitension needs.
struct FrenetPointData {
  std::vector<int> eps;
  std::vector<double> k;  // k_1 .. k_{n-1}
  double k1_d1 = 0.0;     // k_1'
  double k1_d2 = 0.0;     // k_1''
  double k2_d1 = 0.0;     // k_2'
};

/// Closed-form bitension (n >= 4) on the unit frame; R21 = R(F_2,F_1)F_1 on that frame.
FrameVector<double> n_frenet_bitension(const FrenetPointData& p, const FrameVector<double>& R21);
FrameVector<double> n_frenet_bitension(const Helix& h, const CurvatureAction<double>& R);
/// Scaled-frame version for helices, exact in the squared curvatures.
FrameVector<Rational> n_frenet_bitension(const ExactHelix& h, const CurvatureAction<Rational>& R);

/// Closed-form tritension of a helix (n >= 4; curvatures beyond k_{n-1} count as zero).
FrameVector<double> n_frenet_tritension(const Helix& h, const CurvatureAction<double>& R);
FrameVector<Rational> n_frenet_tritension(const ExactHelix& h, const CurvatureAction<Rational>& R);

}  // namespace polyfrenet
