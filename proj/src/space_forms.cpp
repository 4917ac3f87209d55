#include "polyfrenet/space_forms.hpp"

#include <cmath>
#include <sstream>

namespace polyfrenet {

DiagonalMetric SpaceForm::embedding_metric() const {
  const int s = sgn(c);
  if (s == 0) return {m, t};
  if (s > 0) return {m + 1, t};
  return {m + 1, t + 1};
}

void validate_space_form(const SpaceForm& sf) {
  if (sf.m < 2) throw std::invalid_argument("space form: dimension m must be at least 2");
  if (sf.t < 1 || sf.t > sf.m - 1)
    throw std::invalid_argument("space form: index t = " + std::to_string(sf.t) + " outside 1.." +
                                std::to_string(sf.m - 1));
}

FrameVector<Rational> curvature_on_frame(const SpaceForm& sf, const Signature& sig, int a, int b, int c) {
  return curvature_on_frame<Rational>(sf.c, sig, a, b, c);
}

double EmbeddedModel::tangency_defect(const CoordVector&, const std::vector<CoordVector>&) const { return 0.0; }

SpaceFormModel::SpaceFormModel(SpaceForm sf) : sf_(std::move(sf)), g_(sf_.embedding_metric()), c_(sf_.curvature()) {}

std::string SpaceFormModel::name() const {
  std::ostringstream os;
  const char* kind = sf_.flat() ? "R" : (c_ > 0 ? "S" : "H");
  os << kind << "^" << sf_.m << "_" << sf_.t << "(" << to_string(sf_.c) << ")";
  return os.str();
}

CoordVector SpaceFormModel::second_fundamental(const CoordVector& p, const CoordVector& x,
                                               const CoordVector& y) const {
  if (c_ == 0.0) return CoordVector::Zero(g_.m);
  return (-c_ * inner(x, y)) * p;
}

double SpaceFormModel::defect(const CoordVector& p) const {
  if (c_ == 0.0) return 0.0;
  return std::abs(inner(p, p) - 1.0 / c_);
}

CoordVector SpaceFormModel::curvature(const CoordVector&, const CoordVector& x, const CoordVector& y,
                                      const CoordVector& z) const {
  return c_ * (inner(y, z) * x - inner(x, z) * y);
}

double SpaceFormModel::tangency_defect(const CoordVector& p, const std::vector<CoordVector>& frame) const {
  if (c_ == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& f : frame) worst = std::max(worst, std::abs(inner(f, p)));
  return worst;
}

void SpaceFormModel::initial_data(const std::vector<int>& eps, CoordVector& point,
                                  std::vector<CoordVector>& frame) const {
  const int dim = g_.m;
  std::vector<int> neg, pos;
  for (int i = 0; i < g_.t; ++i) neg.push_back(i);
  for (int i = g_.t; i < dim; ++i) pos.push_back(i);
  point = CoordVector::Zero(dim);
  if (c_ > 0) {
    point[pos.back()] = 1.0 / std::sqrt(c_);
    pos.pop_back();
  } else if (c_ < 0) {
    point[neg.front()] = 1.0 / std::sqrt(-c_);
    neg.erase(neg.begin());
  }
  std::vector<CoordVector> raw;
  std::size_t in = 0, ip = 0;
  for (int e : eps) {
    auto& pool = e < 0 ? neg : pos;
    auto& cursor = e < 0 ? in : ip;
    if (cursor >= pool.size())
      throw std::invalid_argument("initial frame: " + name() + " has no room for another vector with eps = " +
                                  std::to_string(e));
    CoordVector v = CoordVector::Zero(dim);
    v[pool[cursor++]] = 1.0;
    raw.push_back(v);
  }
  frame = gram_schmidt_nondegenerate(raw, g_).frame;
}

CoordVector embedded_connection(const SpaceForm& sf, const CoordVector& point, const CoordVector& x,
                                const CoordVector& dx) {
  if (sf.flat()) return dx;
  const DiagonalMetric g = sf.embedding_metric();
  const double c = sf.curvature();
  if (point.size() != g.m || x.size() != g.m || dx.size() != g.m)
    throw std::invalid_argument("embedded_connection: dimension mismatch");
  const double pp = inner_product(point, point, g);
  if (std::abs(pp * c - 1.0) > 1e-6)
    throw std::domain_error("embedded_connection: point is off the model quadric (<p,p> = " + std::to_string(pp) +
                            ")");
  return dx - (c * inner_product(dx, point, g)) * point;
}

ProductModel::ProductModel(int m, Rational c) : fiber_(SpaceForm{m - 1, 0, std::move(c)}) {
  if (m < 2) throw std::invalid_argument("product model: dimension must be at least 2");
}

std::string ProductModel::name() const {
  return "R_1 x " + fiber_.name();
}

double ProductModel::inner(const CoordVector& x, const CoordVector& y) const {
  return -x[0] * y[0] + fiber_.inner(fiber_part(x), fiber_part(y));
}

CoordVector ProductModel::lift(double t, const CoordVector& f) const {
  CoordVector out(chart_dim());
  out[0] = t;
  out.tail(fiber_.chart_dim()) = f;
  return out;
}

CoordVector ProductModel::second_fundamental(const CoordVector& p, const CoordVector& x, const CoordVector& y) const {
  return lift(0.0, fiber_.second_fundamental(fiber_part(p), fiber_part(x), fiber_part(y)));
}

double ProductModel::defect(const CoordVector& p) const { return fiber_.defect(fiber_part(p)); }

CoordVector ProductModel::curvature(const CoordVector& p, const CoordVector& x, const CoordVector& y,
                                    const CoordVector& z) const {
  return lift(0.0, fiber_.curvature(fiber_part(p), fiber_part(x), fiber_part(y), fiber_part(z)));
}

double ProductModel::tangency_defect(const CoordVector& p, const std::vector<CoordVector>& frame) const {
  std::vector<CoordVector> parts;
  for (const auto& f : frame) parts.push_back(fiber_part(f));
  return fiber_.tangency_defect(fiber_part(p), parts);
}

void ProductModel::initial_data(const std::vector<int>& eps, CoordVector& point,
                                std::vector<CoordVector>& frame) const {
  int negatives = 0;
  std::vector<int> fiber_eps;
  for (int e : eps) {
    if (e < 0)
      ++negatives;
    else
      fiber_eps.push_back(e);
  }
  if (negatives > 1) throw std::invalid_argument("initial frame: product space has index 1");
  CoordVector fp;
  std::vector<CoordVector> ff;
  fiber_.initial_data(fiber_eps, fp, ff);
  point = lift(0.0, fp);
  frame.clear();
  std::size_t k = 0;
  for (int e : eps) {
    if (e < 0) {
      CoordVector dt = CoordVector::Zero(chart_dim());
      dt[0] = 1.0;
      frame.push_back(dt);
    } else {
      frame.push_back(lift(0.0, ff[k++]));
    }
  }
}

std::unique_ptr<EmbeddedModel> make_space_form_model(const SpaceForm& sf) {
  return std::make_unique<SpaceFormModel>(sf);
}

}  // namespace polyfrenet
