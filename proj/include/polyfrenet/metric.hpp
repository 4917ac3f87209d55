#pragma once

// Pseudo-Euclidean inner products, frame signatures, and Gram-Schmidt for
// non-degenerate bases.

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfrenet {

using CoordVector = Eigen::VectorXd;

/// Causal signs of an ordered frame inside an ambient space of dimension m and index t.
struct Signature {
  std::vector<int> eps;
  int ambient_index = 1;
  int ambient_dim = 0;

  int n() const { return static_cast<int>(eps.size()); }
  int negatives() const;
  int positives() const { return n() - negatives(); }

  /// Smallest ambient (m, t) that carries eps with 1 <= t <= m-1, n <= m.
  static Signature minimal_for(std::vector<int> eps);
};

struct SignatureReport {
  bool accepted = true;
  std::string violation;  // empty when accepted
};

SignatureReport validate_signature(const Signature& sig);

/// Throws std::invalid_argument with the violation text when sig is rejected.
void require_valid(const Signature& sig);

/// diag(-1 x t, +1 x (m - t)).
struct DiagonalMetric {
  int m = 0;
  int t = 0;

  double sign(int i) const { return i < t ? -1.0 : 1.0; }
};

double inner_product(const CoordVector& x, const CoordVector& y, const DiagonalMetric& g);

class DegenerateSpanError : public std::runtime_error {
 public:
  DegenerateSpanError(int index, double value);
  int index() const { return index_; }
  double restricted_norm() const { return value_; }

 private:
  int index_;
  double value_;
};

struct OrthonormalFrame {
  std::vector<CoordVector> frame;
  std::vector<int> eps;
};

using BilinearForm = std::function<double(const CoordVector&, const CoordVector&)>;

/// Orthonormalizes vectors in order. A projected vector w is degenerate when
/// |<w,w>| < rel_tol * |v|^2 (Euclidean norm of the input vector).
OrthonormalFrame gram_schmidt_nondegenerate(const std::vector<CoordVector>& vectors, const DiagonalMetric& g,
                                            double rel_tol = 1e-10);
OrthonormalFrame gram_schmidt_nondegenerate(const std::vector<CoordVector>& vectors, const BilinearForm& form,
                                            double rel_tol = 1e-10);

/// max_{i,j} |<E_i,E_j> - eps_i delta_ij|.
double orthonormality_defect(const std::vector<CoordVector>& frame, const std::vector<int>& eps,
                             const BilinearForm& form);

}  // namespace polyfrenet
