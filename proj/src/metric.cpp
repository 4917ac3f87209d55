#include "polyfrenet/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polyfrenet {

int Signature::negatives() const {
  return static_cast<int>(std::count(eps.begin(), eps.end(), -1));
}

Signature Signature::minimal_for(std::vector<int> eps) {
  Signature s;
  s.eps = std::move(eps);
  s.ambient_index = std::max(1, s.negatives());
  s.ambient_dim = std::max(s.n(), s.ambient_index + std::max(1, s.positives()));
  return s;
}

SignatureReport validate_signature(const Signature& sig) {
  std::ostringstream why;
  for (std::size_t i = 0; i < sig.eps.size(); ++i) {
    if (sig.eps[i] != 1 && sig.eps[i] != -1) {
      why << "eps[" << i + 1 << "] = " << sig.eps[i] << " is not +1 or -1";
      return {false, why.str()};
    }
  }
  const int m = sig.ambient_dim, t = sig.ambient_index;
  if (t < 1 || t > m - 1) {
    why << "ambient index t = " << t << " outside 1.." << m - 1;
    return {false, why.str()};
  }
  if (sig.n() > m) {
    why << "frame length n = " << sig.n() << " exceeds ambient dimension m = " << m;
    return {false, why.str()};
  }
  if (sig.negatives() > t) {
    why << "count(eps = -1) = " << sig.negatives() << " exceeds index t = " << t;
    return {false, why.str()};
  }
  if (sig.positives() > m - t) {
    why << "count(eps = +1) = " << sig.positives() << " exceeds m - t = " << m - t;
    return {false, why.str()};
  }
  return {};
}

void require_valid(const Signature& sig) {
  auto rep = validate_signature(sig);
  if (!rep.accepted) throw std::invalid_argument("invalid signature: " + rep.violation);
}

double inner_product(const CoordVector& x, const CoordVector& y, const DiagonalMetric& g) {
  if (x.size() != g.m || y.size() != g.m)
    throw std::invalid_argument("inner_product: dimension mismatch (" + std::to_string(x.size()) + ", " +
                                std::to_string(y.size()) + " vs m = " + std::to_string(g.m) + ")");
  double neg = 0.0, pos = 0.0;
  for (int i = 0; i < g.t; ++i) neg += x[i] * y[i];
  for (int i = g.t; i < g.m; ++i) pos += x[i] * y[i];
  return pos - neg;
}

DegenerateSpanError::DegenerateSpanError(int index, double value)
    : std::runtime_error("degenerate span at vector " + std::to_string(index + 1) +
                         " (restricted <w,w> = " + std::to_string(value) + ")"),
      index_(index),
      value_(value) {}

OrthonormalFrame gram_schmidt_nondegenerate(const std::vector<CoordVector>& vectors, const DiagonalMetric& g,
                                            double rel_tol) {
  return gram_schmidt_nondegenerate(
      vectors, [&g](const CoordVector& a, const CoordVector& b) { return inner_product(a, b, g); }, rel_tol);
}

OrthonormalFrame gram_schmidt_nondegenerate(const std::vector<CoordVector>& vectors, const BilinearForm& form,
                                            double rel_tol) {
  OrthonormalFrame out;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    CoordVector w = vectors[k];
    // two passes keep roundoff at the 1e-16 level for nearly-null inputs
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < out.frame.size(); ++j)
        w -= (out.eps[j] * form(w, out.frame[j])) * out.frame[j];
    }
    const double scale = vectors[k].squaredNorm();
    const double ww = form(w, w);
    if (scale == 0.0 || std::abs(ww) < rel_tol * scale) throw DegenerateSpanError(static_cast<int>(k), ww);
    const int e = ww < 0 ? -1 : 1;
    out.frame.push_back(w / std::sqrt(std::abs(ww)));
    out.eps.push_back(e);
  }
  return out;
}

double orthonormality_defect(const std::vector<CoordVector>& frame, const std::vector<int>& eps,
                             const BilinearForm& form) {
  double worst = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = i; j < frame.size(); ++j) {
      double target = (i == j) ? eps[i] : 0.0;
      worst = std::max(worst, std::abs(form(frame[i], frame[j]) - target));
    }
  return worst;
}

}  // namespace polyfrenet
