#include "polyfrenet/tension.hpp"

namespace polyfrenet {

namespace {

void require_n_at_least_4(int n, const char* what) {
  if (n < 4) throw std::invalid_argument(std::string(what) + ": needs n >= 4, got n = " + std::to_string(n));
}

template <class S>
S at_or_zero(const std::vector<S>& v, int i) {
  return i < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i)] : S(0);
}

int eps_or_one(const std::vector<int>& eps, int i) {
  return i < static_cast<int>(eps.size()) ? eps[static_cast<std::size_t>(i)] : 1;
}

template <class S>
void add_if_present(FrameVector<S>& v, int i, const S& x) {
  if (i < v.size()) v[i] += x;
}

}  // namespace

TensionResult<double> tension_field(const Helix& h, double c, int r) {
  return space_form_tension(unit_frame(h), c, r);
}

TensionResult<Rational> tension_field(const ExactHelix& h, const Rational& c, int r) {
  return space_form_tension(scaled_frame(h), c, r);
}

TensionResult<double> tension_field_along(const FrenetCurve& fc, double s, const CurvatureAction<double>& R, int r) {
  detail::check_order(r);
  std::vector<double> gram;
  for (int e : fc.sig.eps) gram.push_back(e);
  return tension_from_powers(covariant_powers_along(fc, s, 2 * r - 1), gram, R, r);
}

FrameVector<double> n_frenet_bitension(const FrenetPointData& p, const FrameVector<double>& R21) {
  const int n = static_cast<int>(p.eps.size());
  require_n_at_least_4(n, "n_frenet_bitension");
  if (static_cast<int>(p.k.size()) != n - 1)
    throw std::invalid_argument("n_frenet_bitension: expected " + std::to_string(n - 1) + " curvatures");
  const int e1 = p.eps[0], e2 = p.eps[1], e3 = p.eps[2], e4 = p.eps[3];
  const double k1 = p.k[0], k2 = p.k[1], k3 = p.k[2];
  FrameVector<double> out(n);
  out[0] = -3.0 * e1 * k1 * p.k1_d1;
  out[1] = p.k1_d2 - e1 * e2 * k1 * k1 * k1 - e2 * e3 * k1 * k2 * k2;
  out[2] = e3 * (2.0 * p.k1_d1 * k2 + k1 * p.k2_d1);
  out[3] = e3 * e4 * k1 * k2 * k3;
  out += k1 * R21;
  out *= static_cast<double>(e2);
  return out;
}

FrameVector<double> n_frenet_bitension(const Helix& h, const CurvatureAction<double>& R) {
  FrenetPointData p{h.sig.eps, h.kappas};
  require_n_at_least_4(h.n(), "n_frenet_bitension");
  return n_frenet_bitension(p, R(1, 0, 0));
}

FrameVector<Rational> n_frenet_bitension(const ExactHelix& h, const CurvatureAction<Rational>& R) {
  const int n = h.n();
  require_n_at_least_4(n, "n_frenet_bitension");
  const auto& e = h.sig.eps;
  const Rational& a1 = h.kappa_sq[0];
  const Rational& a2 = h.kappa_sq[1];
  FrameVector<Rational> out(n);
  out[1] = -e[0] * a1 - e[2] * a2;
  out[3] = e[1] * e[2] * e[3];
  out += Rational(e[1]) * R(1, 0, 0);
  return out;
}

FrameVector<double> n_frenet_tritension(const Helix& h, const CurvatureAction<double>& R) {
  const int n = h.n();
  require_n_at_least_4(n, "n_frenet_tritension");
  const auto& e = h.sig.eps;
  const int e1 = e[0], e2 = e[1], e3 = e[2], e4 = e[3], e5 = eps_or_one(e, 4), e6 = eps_or_one(e, 5);
  const double k1 = at_or_zero(h.kappas, 0), k2 = at_or_zero(h.kappas, 1), k3 = at_or_zero(h.kappas, 2),
               k4 = at_or_zero(h.kappas, 3), k5 = at_or_zero(h.kappas, 4);
  const double X = e1 * k1 * k1 + e3 * k2 * k2;

  FrameVector<double> brace(n);
  brace[1] = -e2 * (e2 * X * X + e4 * k2 * k2 * k3 * k3);
  brace[3] = e3 * e4 * k2 * k3 * (e2 * X + e4 * (e3 * k3 * k3 + e5 * k4 * k4));
  add_if_present(brace, 5, -e3 * e4 * e5 * e6 * k2 * k3 * k4 * k5);
  brace += (e2 * (2.0 * e1 * k1 * k1 + e3 * k2 * k2)) * R(1, 0, 0);
  brace += (e2 * e3 * k1 * k2) * R(2, 1, 0);
  brace -= (e3 * e4 * k2 * k3) * R(3, 0, 0);
  brace *= -e2 * k1;
  return brace;
}

FrameVector<Rational> n_frenet_tritension(const ExactHelix& h, const CurvatureAction<Rational>& R) {
  const int n = h.n();
  require_n_at_least_4(n, "n_frenet_tritension");
  const auto& e = h.sig.eps;
  const int e1 = e[0], e2 = e[1], e3 = e[2], e4 = e[3], e5 = eps_or_one(e, 4), e6 = eps_or_one(e, 5);
  const Rational a1 = at_or_zero(h.kappa_sq, 0), a2 = at_or_zero(h.kappa_sq, 1), a3 = at_or_zero(h.kappa_sq, 2),
                 a4 = at_or_zero(h.kappa_sq, 3);
  const Rational X = e1 * a1 + e3 * a2;

  FrameVector<Rational> out(n);
  out[1] = e2 * X * X + e4 * a2 * a3;
  out[3] = -e2 * e3 * e4 * (e2 * X + e4 * (e3 * a3 + e5 * a4));
  add_if_present(out, 5, Rational(e2 * e3 * e4 * e5 * e6));
  out -= Rational(2 * e1 * a1 + e3 * a2) * R(1, 0, 0);
  out -= Rational(e3) * R(2, 1, 0);
  out += Rational(e2 * e3 * e4) * R(3, 0, 0);
  return out;
}

}  // namespace polyfrenet
