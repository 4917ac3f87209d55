#pragma once

// Space forms N^m_t(c) and the curvature action on frames.
//
// Curvature convention: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
// which on a space form gives R(X,Y)Z = c(<Y,Z>X - <X,Z>Y).
//
// Curved models live on quadrics <x,x> = 1/c: the sphere in R^{m+1}_t for c > 0
// and the hyperbolic model in R^{m+1}_{t+1} for c < 0. Differentiating
// <Y,x> = 0 along the curve shows the ambient derivative of a tangent field Y
// along X has normal part -c<X,Y>x, so the Levi-Civita derivative is the
// ambient one with that part removed.

#include "polyfrenet/exact.hpp"
#include "polyfrenet/frenet.hpp"
#include "polyfrenet/metric.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace polyfrenet {

struct SpaceForm {
  int m = 3;
  int t = 1;
  Rational c = 0;

  double curvature() const { return to_double(c); }
  bool flat() const { return sgn(c) == 0; }
  /// Dimension and metric of the pseudo-Euclidean space carrying the model.
  DiagonalMetric embedding_metric() const;
};

/// Throws std::invalid_argument unless 1 <= t <= m-1.
void validate_space_form(const SpaceForm& sf);

/// R(E_a, E_b) E_c as coefficients on a frame, indices 0-based.
template <class S>
using CurvatureAction = std::function<FrameVector<S>(int a, int b, int c)>;

/// Curvature of the form R(E_a,E_b)E_c = alpha(a,b) (g_bc E_a - g_ac E_b) on a
/// diagonal frame with gram g. Space forms have alpha = c; warped products get
/// different alpha for horizontal and vertical pairs.
template <class S>
CurvatureAction<S> pair_curvature_action(std::function<S(int, int)> alpha, std::vector<S> gram) {
  return [alpha = std::move(alpha), gram = std::move(gram)](int a, int b, int c) {
    const int n = static_cast<int>(gram.size());
    if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
      throw std::out_of_range("curvature action: frame index out of range");
    FrameVector<S> out(n);
    if (a == b) return out;
    const S al = alpha(a, b);
    if (is_zero(al)) return out;
    if (b == c) out[a] += al * gram[static_cast<std::size_t>(b)];
    if (a == c) out[b] -= al * gram[static_cast<std::size_t>(a)];
    return out;
  };
}

template <class S>
CurvatureAction<S> space_form_action(const S& c, const FrameAlgebra<S>& frame) {
  return pair_curvature_action<S>([c](int, int) { return c; }, frame.gram);
}

/// R(F_a,F_b)F_c on a unit frame with signs sig.eps, 0-based indices.
template <class S>
FrameVector<S> curvature_on_frame(const S& c, const Signature& sig, int a, int b, int cc) {
  std::vector<S> gram;
  for (int e : sig.eps) gram.push_back(S(e));
  return pair_curvature_action<S>([c](int, int) { return c; }, gram)(a, b, cc);
}

FrameVector<Rational> curvature_on_frame(const SpaceForm& sf, const Signature& sig, int a, int b, int c);

/// Embedded chart of a model geometry, used by the curve integrator.
class EmbeddedModel {
 public:
  virtual ~EmbeddedModel() = default;

  virtual std::string name() const = 0;
  virtual int chart_dim() const = 0;
  /// Metric of the chart space (restricted to tangent vectors it is the model metric).
  virtual double inner(const CoordVector& x, const CoordVector& y) const = 0;
  /// Normal part h(X,Y) of the chart derivative of a tangent field Y along X at p.
  virtual CoordVector second_fundamental(const CoordVector& p, const CoordVector& x, const CoordVector& y) const = 0;
  /// Distance of p from the model (0 for flat charts).
  virtual double defect(const CoordVector& p) const = 0;
  /// R(X,Y)Z for tangent vectors at p.
  virtual CoordVector curvature(const CoordVector& p, const CoordVector& x, const CoordVector& y,
                                const CoordVector& z) const = 0;
  /// A point on the model and an orthonormal tangent frame with the requested signs.
  virtual void initial_data(const std::vector<int>& eps, CoordVector& point, std::vector<CoordVector>& frame) const = 0;

  /// Largest tangency violation max_i |<F_i, normal>| for a frame at p (0 for flat charts).
  virtual double tangency_defect(const CoordVector& p, const std::vector<CoordVector>& frame) const;

  BilinearForm form() const {
    return [this](const CoordVector& a, const CoordVector& b) { return inner(a, b); };
  }
};

class SpaceFormModel : public EmbeddedModel {
 public:
  explicit SpaceFormModel(SpaceForm sf);

  const SpaceForm& space_form() const { return sf_; }

  std::string name() const override;
  int chart_dim() const override { return g_.m; }
  double inner(const CoordVector& x, const CoordVector& y) const override { return inner_product(x, y, g_); }
  CoordVector second_fundamental(const CoordVector& p, const CoordVector& x, const CoordVector& y) const override;
  double defect(const CoordVector& p) const override;
  CoordVector curvature(const CoordVector& p, const CoordVector& x, const CoordVector& y,
                        const CoordVector& z) const override;
  void initial_data(const std::vector<int>& eps, CoordVector& point, std::vector<CoordVector>& frame) const override;
  double tangency_defect(const CoordVector& p, const std::vector<CoordVector>& frame) const override;

 private:
  SpaceForm sf_;
  DiagonalMetric g_;
  double c_;
};

/// Levi-Civita derivative of a tangent field given its chart derivative dX at p:
/// dX - c<dX,p>p on curved models, dX on flat ones. X itself must be tangent.
/// Throws std::domain_error when p is off the quadric by more than 1e-6 relative.
CoordVector embedded_connection(const SpaceForm& sf, const CoordVector& point, const CoordVector& x,
                                const CoordVector& dx);

/// R x N^{m-1}(c) with metric -dt^2 + g_c, chart coordinates (t, fiber chart).
class ProductModel : public EmbeddedModel {
 public:
  ProductModel(int m, Rational c);

  std::string name() const override;
  int chart_dim() const override { return 1 + fiber_.chart_dim(); }
  double inner(const CoordVector& x, const CoordVector& y) const override;
  CoordVector second_fundamental(const CoordVector& p, const CoordVector& x, const CoordVector& y) const override;
  double defect(const CoordVector& p) const override;
  CoordVector curvature(const CoordVector& p, const CoordVector& x, const CoordVector& y,
                        const CoordVector& z) const override;
  void initial_data(const std::vector<int>& eps, CoordVector& point, std::vector<CoordVector>& frame) const override;
  double tangency_defect(const CoordVector& p, const std::vector<CoordVector>& frame) const override;

  const SpaceFormModel& fiber() const { return fiber_; }

 private:
  CoordVector fiber_part(const CoordVector& v) const { return v.tail(fiber_.chart_dim()); }
  CoordVector lift(double t, const CoordVector& f) const;

  SpaceFormModel fiber_;
};

std::unique_ptr<EmbeddedModel> make_space_form_model(const SpaceForm& sf);

}  // namespace polyfrenet
