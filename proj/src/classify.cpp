#include "polyfrenet/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyfrenet {

namespace {

void require_sign(int e, const char* name) {
  if (e != 1 && e != -1) throw std::invalid_argument(std::string(name) + " must be +1 or -1");
}

void require_order(int r) {
  if (r < 2) throw std::invalid_argument("r-harmonicity classification needs r >= 2");
}

std::string eps_string(const std::vector<int>& eps) {
  std::string s;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(eps[i]);
  }
  return s;
}

Solution point(const std::string& name, QuadraticSurd v, std::string branch) {
  Solution s;
  s.values.emplace_back(name, std::move(v));
  s.degenerate = s.values.back().second.sign() == 0;
  s.branch = std::move(branch);
  return s;
}

// Lorentzian 3-manifold reading of the signs, used only to annotate results.
std::string lorentz_case(const Rational& c, int e1, int e2, int e3) {
  if (e3 != -e1 * e2) return {};
  std::string normal = e2 > 0 ? "N space-like" : "N time-like";
  if (sgn(c) == 0) return "flat, " + normal;
  return std::string(sgn(c) > 0 ? "c > 0, " : "c < 0, ") + normal;
}

}  // namespace

std::string to_string(Status s) { return s == Status::feasible ? "feasible" : "infeasible"; }

const QuadraticSurd* Solution::find(const std::string& name) const {
  for (const auto& [k, v] : values)
    if (k == name) return &v;
  return nullptr;
}

ClassificationResult classify_2frenet(const Rational& c, int e1, int e2, int r, bool surface) {
  require_sign(e1, "eps1");
  require_sign(e2, "eps2");
  require_order(r);
  if (surface && e1 * e2 != -1)
    throw std::invalid_argument("curve on a Lorentz surface needs eps1 * eps2 = -1");
  ClassificationResult out;
  out.theorem = surface ? "two_frenet_surface" : "two_frenet_space_form";
  out.inputs = {{"c", to_string(c)}, {"eps", eps_string({e1, e2})}, {"r", std::to_string(r)}};
  Rational k2 = e2 * (r - 1) * c;
  if (sgn(k2) > 0) {
    out.status = Status::feasible;
    out.solutions.push_back(point("kappa^2", k2, "kappa^2 = eps2 (r-1) c"));
  } else {
    out.note = "eps2 (r-1) c = " + to_string(k2) + " is not positive";
  }
  return out;
}

ClassificationResult classify_triharmonic_2frenet(const Rational& c, int e2) {
  require_sign(e2, "eps2");
  ClassificationResult out;
  out.theorem = "two_frenet_triharmonic";
  out.inputs = {{"c", to_string(c)}, {"eps2", std::to_string(e2)}, {"r", "3"}};
  Rational k2 = 2 * e2 * c;
  if (sgn(k2) > 0) {
    out.status = Status::feasible;
    out.solutions.push_back(point("kappa^2", k2, "kappa^2 = 2 eps2 c"));
  } else {
    out.note = "needs eps2 c > 0";
  }
  return out;
}

bool two_frenet_is_solution(const Rational& c, int e1, int e2, int r, const Rational& kappa_sq) {
  auto res = classify_2frenet(c, e1, e2, r);
  for (const auto& s : res.solutions)
    if (!s.degenerate && compare(*s.find("kappa^2"), QuadraticSurd(kappa_sq)) == 0) return true;
  return false;
}

ClassificationResult classify_3frenet(const Rational& c, int e1, int e2, int e3, int r,
                                      const std::optional<Rational>& kappa_sq) {
  require_sign(e1, "eps1");
  require_sign(e2, "eps2");
  require_sign(e3, "eps3");
  require_order(r);
  ClassificationResult out;
  out.theorem = "three_frenet_space_form";
  out.inputs = {{"c", to_string(c)}, {"eps", eps_string({e1, e2, e3})}, {"r", std::to_string(r)}};
  out.note = lorentz_case(c, e1, e2, e3);
  const bool null_family = r >= 4 && e3 == -e1;

  if (!kappa_sq) {
    Solution fam;
    if (r == 2) {
      fam.family = "eps2*(eps1*kappa^2 + eps3*tau^2) = c*eps1";
      fam.branch = "linear";
      out.status = (e1 != e3 || sgn(c) * e2 > 0) ? Status::feasible : Status::infeasible;
      out.solutions.push_back(fam);
      return out;
    }
    fam.family = "eps2*(eps1*kappa^2 + eps3*tau^2)^2 = c*(eps1*eps3*tau^2 + (r-1)*kappa^2)";
    fam.branch = "bracket";
    out.solutions.push_back(fam);
    if (null_family) {
      Solution z;
      z.family = "tau^2 = kappa^2 (eps1*kappa^2 + eps3*tau^2 = 0)";
      z.branch = "null-sum family";
      out.solutions.push_back(z);
    }
    out.status = (sgn(c) * e2 > 0 || e1 * e3 == -1) ? Status::feasible : Status::infeasible;
    return out;
  }

  const Rational& a = *kappa_sq;
  if (sgn(a) <= 0) throw std::invalid_argument("kappa^2 must be positive");
  out.inputs.emplace_back("kappa^2", to_string(a));
  std::vector<Solution> sols;
  if (r == 2) {
    Rational t2 = e3 * (c * e1 * e2 - e1 * a);
    if (sgn(t2) >= 0) sols.push_back(point("tau^2", t2, "linear"));
  } else {
    const Rational B = e1 * e3 * (2 * a - e2 * c);
    const Rational C = a * a - e2 * c * (r - 1) * a;
    const Rational D = B * B - 4 * C;
    if (sgn(D) >= 0) {
      const Rational mid = -B / 2;
      QuadraticSurd lo(mid, Rational(-1, 2), D), hi(mid, Rational(1, 2), D);
      if (lo.sign() >= 0) sols.push_back(point("tau^2", lo, sgn(D) == 0 ? "double root" : "root -"));
      if (sgn(D) > 0 && hi.sign() >= 0) sols.push_back(point("tau^2", hi, "root +"));
    }
    if (null_family) {
      const QuadraticSurd t2(a);
      bool present = false;
      for (const auto& s : sols) present = present || compare(*s.find("tau^2"), t2) == 0;
      if (!present) sols.push_back(point("tau^2", t2, "null-sum family"));
    }
  }
  std::stable_sort(sols.begin(), sols.end(),
                   [](const Solution& x, const Solution& y) { return *x.find("tau^2") < *y.find("tau^2"); });
  out.solutions = std::move(sols);
  for (const auto& s : out.solutions)
    if (!s.degenerate) out.status = Status::feasible;
  return out;
}

bool three_frenet_is_solution(const Rational& c, int e1, int e2, int e3, int r, const Rational& kappa_sq,
                              const Rational& tau_sq) {
  auto res = classify_3frenet(c, e1, e2, e3, r, kappa_sq);
  const QuadraticSurd t(tau_sq);
  for (const auto& s : res.solutions)
    if (!s.degenerate && compare(*s.find("tau^2"), t) == 0) return true;
  return false;
}

ClassificationResult classify_nfrenet_biharmonic(const Signature& sig, const Rational& c, bool full) {
  const int n = sig.n();
  if (n < 4) throw std::invalid_argument("n-Frenet biharmonic classification needs n >= 4");
  const int e1 = sig.eps[0], e2 = sig.eps[1], e3 = sig.eps[2];
  ClassificationResult out;
  out.theorem = "n_frenet_biharmonic_space_form";
  out.inputs = {{"c", to_string(c)}, {"eps", eps_string(sig.eps)}, {"n", std::to_string(n)},
                {"full", full ? "true" : "false"}};
  if (full) {
    out.status = Status::infeasible;
    out.note = "biharmonicity forces eps3*k2*k3 = 0, so k3 > 0 is impossible";
    return out;
  }
  Solution fam;
  fam.family = "eps1*kappa1^2 + eps3*kappa2^2 = c*eps1*eps2, kappa3 = 0";
  fam.branch = "k3 = 0";
  out.solutions.push_back(fam);
  out.status = (e1 != e3 || sgn(c) * e2 > 0) ? Status::feasible : Status::infeasible;
  return out;
}

double BiharmonicSystem::max_abs() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, std::abs(r));
  return m;
}

BiharmonicSystem nfrenet_biharmonic_system(const FrenetPointData& p, const FrameVector<double>& R21) {
  const int n = static_cast<int>(p.eps.size());
  if (n < 4) throw std::invalid_argument("n-Frenet biharmonic system needs n >= 4");
  if (R21.size() != n) throw std::invalid_argument("R(F2,F1)F1 must have n coefficients");
  auto proj = [&](int i) { return p.eps[static_cast<std::size_t>(i)] * R21[i]; };  // <R21, F_{i+1}>
  const double k1 = p.k[0], k2 = p.k[1], k3 = p.k[2];
  BiharmonicSystem sys;
  sys.equations = {"k1' = 0", "eps1*k1^2 + eps3*k2^2 = <R(F2,F1)F1, F2>", "k2' = -<R(F2,F1)F1, F3>",
                   "eps3*k2*k3 = -<R(F2,F1)F1, F4>"};
  sys.residuals = {p.k1_d1, p.eps[0] * k1 * k1 + p.eps[2] * k2 * k2 - proj(1), p.k2_d1 + proj(2),
                   p.eps[2] * k2 * k3 + proj(3)};
  for (int i = 4; i < n; ++i) {
    sys.equations.push_back("<R(F2,F1)F1, F" + std::to_string(i + 1) + "> = 0");
    sys.residuals.push_back(proj(i));
  }
  return sys;
}

TriharmonicEquations nfrenet_triharmonic_equations(const Signature& sig, const Rational& c,
                                                   const std::vector<Rational>& a) {
  const int n = sig.n();
  if (n != 4 && n != 5) throw std::invalid_argument("triharmonic n-Frenet classification covers n = 4 and n = 5 only");
  if (static_cast<int>(a.size()) != n - 1)
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " squared curvatures");
  const auto& e = sig.eps;
  const Rational X = e[0] * a[0] + e[2] * a[1];
  TriharmonicEquations eq;
  eq.lhs1 = X * X + e[1] * e[3] * a[1] * a[2];
  eq.rhs1 = c * e[0] * e[1] * (2 * e[0] * a[0] + e[2] * a[1]);
  if (n == 4)
    eq.lhs2 = e[1] * X + e[2] * e[3] * a[2];
  else
    eq.lhs2 = e[1] * X + e[3] * (e[2] * a[2] + e[4] * a[3]);
  eq.rhs2 = c * e[0];
  return eq;
}

ClassificationResult classify_nfrenet_triharmonic(const Signature& sig, const Rational& c,
                                                  const std::vector<Rational>& kappa_sq) {
  const int n = sig.n();
  if (n != 4 && n != 5) throw std::invalid_argument("triharmonic n-Frenet classification covers n = 4 and n = 5 only");
  const int given = static_cast<int>(kappa_sq.size());
  if (given != n - 1 && given != n - 2)
    throw std::invalid_argument("give " + std::to_string(n - 1) + " squared curvatures, or " + std::to_string(n - 2) +
                                " to solve for the last");
  for (const auto& k : kappa_sq)
    if (sgn(k) <= 0) throw std::invalid_argument("squared curvatures must be positive");

  ClassificationResult out;
  out.theorem = "n_frenet_triharmonic_space_form";
  out.inputs = {{"c", to_string(c)}, {"eps", eps_string(sig.eps)}, {"n", std::to_string(n)}};
  for (int i = 0; i < given; ++i)
    out.inputs.emplace_back("kappa" + std::to_string(i + 1) + "^2", to_string(kappa_sq[static_cast<std::size_t>(i)]));

  std::vector<Rational> a = kappa_sq;
  const auto& e = sig.eps;
  std::string last = "kappa" + std::to_string(n - 1) + "^2";
  if (given == n - 2) {
    const Rational X = e[0] * a[0] + e[2] * a[1];
    Rational solved = n == 4 ? Rational(e[2] * e[3] * (c * e[0] - e[1] * X))
                             : Rational(e[3] * e[4] * (c * e[0] - e[1] * X - e[2] * e[3] * a[2]));
    if (sgn(solved) <= 0) {
      out.note = "second equation needs " + last + " = " + to_string(solved) + ", not positive";
      return out;
    }
    a.push_back(solved);
  }
  auto eq = nfrenet_triharmonic_equations(sig, c, a);
  if (!eq.hold()) {
    out.note = "equations: " + to_string(eq.lhs1) + " vs " + to_string(eq.rhs1) + "; " + to_string(eq.lhs2) + " vs " +
               to_string(eq.rhs2);
    return out;
  }
  out.status = Status::feasible;
  Solution s;
  for (int i = 0; i < n - 1; ++i)
    s.values.emplace_back("kappa" + std::to_string(i + 1) + "^2", QuadraticSurd(a[static_cast<std::size_t>(i)]));
  s.branch = given == n - 2 ? "solved " + last : "checked";
  out.solutions.push_back(s);
  return out;
}

}  // namespace polyfrenet
