#include "polyfrenet/products_rw.hpp"
#include "polyfrenet/synthesize.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace polyfrenet;

namespace {

SynthesisProblem helix_problem(std::shared_ptr<const EmbeddedModel> model, Signature sig, std::vector<double> k,
                               double s_end) {
  SynthesisProblem p;
  p.geometry = std::move(model);
  p.fc.sig = std::move(sig);
  for (double x : k) p.fc.k.push_back(constant_curvature(x));
  p.s_end = s_end;
  auto_initial_data(p);
  return p;
}

std::shared_ptr<const EmbeddedModel> space_form(int m, int t, Rational c) {
  return std::make_shared<SpaceFormModel>(SpaceForm{m, t, std::move(c)});
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

}  // namespace

TEST_SUITE("synthesize") {
  TEST_CASE("zero curvature gives a straight line") {
    auto p = helix_problem(space_form(3, 1, 0), Signature{{1, 1, -1}, 1, 3}, {0.0, 0.0}, 5.0);
    const auto sol = integrate_frenet(p);
    CHECK(sol.max_drift < 1e-14);
    for (const auto& s : sol.samples) {
      CHECK((s.point - (p.initial_point + s.s * p.initial_frame[0])).cwiseAbs().maxCoeff() < 1e-12);
      for (std::size_t i = 0; i < s.frame.size(); ++i) CHECK((s.frame[i] - p.initial_frame[i]).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK(orthonormality_drift(sol, *p.geometry) < 1e-14);
  }

  TEST_CASE("flat null-sum helix") {
    auto p = helix_problem(space_form(3, 1, 0), Signature{{1, 1, -1}, 1, 3}, {1.0, 1.0}, 10.0);
    const auto sol = integrate_frenet(p);
    CHECK(sol.max_drift < 1e-8);
    for (int r = 2; r <= 4; ++r) CHECK(max_of(numeric_tension(sol, p.fc, *p.geometry, r)) < 1e-6);
  }

  TEST_CASE("perturbed helix has a visible bitension") {
    auto p = helix_problem(space_form(3, 1, 0), Signature{{1, 1, -1}, 1, 3}, {1.1, 1.0}, 10.0);
    const auto sol = integrate_frenet(p);
    const auto res = numeric_tension(sol, p.fc, *p.geometry, 2);
    CHECK(*std::min_element(res.begin(), res.end()) > 0.01);
  }

  TEST_CASE("triharmonic curve on S^2_1") {
    auto p = helix_problem(space_form(2, 1, 1), Signature{{-1, 1}, 1, 2}, {std::sqrt(2.0)}, 2.0);
    const auto sol = integrate_frenet(p);
    CHECK(sol.max_defect < 1e-8);
    CHECK(max_of(numeric_tension(sol, p.fc, *p.geometry, 3)) < 1e-6);
    CHECK(max_of(numeric_tension(sol, p.fc, *p.geometry, 2)) > 0.1);
  }

  TEST_CASE("coarse tolerances trip the drift monitor") {
    auto p = helix_problem(space_form(3, 1, 0), Signature{{1, 1, -1}, 1, 3}, {2.0, 1.0}, 20.0);
    p.tol.ode_rel = 1e-2;
    p.tol.ode_abs = 1e-2;
    p.tol.drift_max = 1e3;
    const auto sol = integrate_frenet(p);
    CHECK(sol.max_drift > 1e-6);

    p.tol.drift_max = 1e-6;
    CHECK_THROWS_AS(integrate_frenet(p), DriftExceeded);
  }

  TEST_CASE("re-orthonormalization is logged") {
    auto p = helix_problem(space_form(3, 1, 0), Signature{{1, 1, -1}, 1, 3}, {2.0, 1.0}, 20.0);
    p.tol.ode_rel = 1e-4;
    p.tol.ode_abs = 1e-4;
    p.tol.drift_max = 1e3;
    const auto plain = integrate_frenet(p);
    p.reorthonormalize_every = 10;
    const auto fixed = integrate_frenet(p);
    CHECK_FALSE(fixed.reorthonormalizations.empty());
    CHECK(fixed.max_drift < plain.max_drift);
    for (const auto& e : fixed.reorthonormalizations) CHECK(e.correction >= 0.0);
  }

  TEST_CASE("drift stays small for bounded frame motion") {
    testing::Gen gen(61);
    for (int trial = 0; trial < 12; ++trial) {
      // Riemannian frames, and Lorentzian ones with k^2 > tau^2, rotate rather than boost
      const bool lorentz = gen.coin();
      const double k = gen.real(0.5, 4.0);
      const double t = lorentz ? gen.real(0.1, 0.9) * k : gen.real(0.1, 4.0);
      const Signature sig = lorentz ? Signature{{1, 1, -1}, 1, 3} : Signature{{1, 1, 1}, 1, 4};
      auto p = helix_problem(space_form(sig.ambient_dim, sig.ambient_index, 0), sig, {k, t}, gen.real(5.0, 20.0));
      const auto sol = integrate_frenet(p);
      CAPTURE(k);
      CAPTURE(t);
      CHECK(sol.max_drift < 1e-8);
    }
  }

  TEST_CASE("general-mode tension matches the helix oracle") {
    struct Case {
      std::shared_ptr<const EmbeddedModel> model;
      Signature sig;
      std::vector<double> k;
      double c;
    };
    const std::vector<Case> cases{
        {space_form(3, 1, 0), Signature{{1, 1, -1}, 1, 3}, {1.0, 0.5}, 0.0},
        {space_form(4, 1, 1), Signature{{1, 1, 1}, 1, 4}, {0.8, 0.6}, 1.0},
        {space_form(3, 1, -1), Signature{{1, 1}, 1, 3}, {0.7}, -1.0},
    };
    for (const auto& cs : cases) {
      auto p = helix_problem(cs.model, cs.sig, cs.k, 4.0);
      const auto sol = integrate_frenet(p);
      const Helix h{cs.sig, cs.k};
      for (int r = 2; r <= 3; ++r) {
        const auto numeric = numeric_tension(sol, p.fc, *p.geometry, r);
        const auto exact = tension_field(h, cs.c, r);
        for (std::size_t j = 0; j < sol.samples.size(); j += 20) {
          CoordVector v = CoordVector::Zero(sol.samples[j].point.size());
          for (int i = 0; i < h.n(); ++i) v += exact.coeffs[i] * sol.samples[j].frame[static_cast<std::size_t>(i)];
          CHECK(std::abs(numeric[j] - v.cwiseAbs().maxCoeff()) < 1e-6);
        }
      }
    }
  }

  TEST_CASE("five-Frenet triharmonic helix in S^5_1") {
    auto p = helix_problem(space_form(5, 1, 1), Signature{{1, 1, -1, 1, 1}, 1, 5}, {1.0, 1.0, 1.0, std::sqrt(2.0)}, 3.0);
    const auto sol = integrate_frenet(p);
    CHECK(sol.max_defect < 1e-8);
    CHECK(max_of(numeric_tension(sol, p.fc, *p.geometry, 3)) < 1e-6);
    CHECK(helix_tension_residual(Helix{p.fc.sig, {1.0, 1.0, 1.0, std::sqrt(2.0)}}, 1.0, 3) < 1e-12);
  }

  TEST_CASE("curvatures read back from a synthesized curve") {
    SynthesisProblem p;
    p.geometry = space_form(4, 1, 0);
    p.fc.sig = Signature{{1, 1, 1}, 1, 4};
    p.fc.k = {sine_curvature(1.0, 0.3, 1.5), polynomial_curvature({0.5, 0.1})};
    p.s_end = 4.0;
    p.samples = 401;
    auto_initial_data(p);
    const auto sol = integrate_frenet(p);
    const auto a = frenet_analysis(sol, *p.geometry);
    for (std::size_t j = 0; j < a.s.size(); ++j) {
      CHECK(a.k[0][j] == doctest::Approx(p.fc.k[0](a.s[j], 0)).epsilon(1e-6));
      CHECK(a.k[1][j] == doctest::Approx(p.fc.k[1](a.s[j], 0)).epsilon(1e-6));
    }

    SynthesisProblem q = p;
    q.fc = curve_from_analysis(a, p.fc.sig);
    const auto again = integrate_frenet(q);
    CHECK(max_point_distance(sol, again) < 1e-6);
  }

  TEST_CASE("helix with lifted curvatures in a Lorentzian product") {
    // fiber helix in S^3 with k_a^2 + tau_a^2 = c solves the fiber condition for r = 2
    const double c = 1.0, d1 = 0.8, ka = std::sqrt(0.3), ta = std::sqrt(0.7);
    const auto lifted = lift_to_product(d1, ka, ta, 1, 1);
    auto model = std::make_shared<ProductModel>(4, Rational(1));
    auto p = helix_problem(model, Signature{{1, 1, 1}, 1, 4}, {lifted.kappa, lifted.tau}, 3.0);
    const auto sol = integrate_frenet(p);
    CHECK(sol.max_defect < 1e-8);
    CHECK(sol.max_drift < 1e-8);
    const auto oracle = product_tension_oracle(d1, ka, ta, 1, c, 2);
    for (double x : oracle.coeffs.coeffs) CHECK(std::abs(x) < 1e-12);
  }

  TEST_CASE("invalid initial data is rejected") {
    auto p = helix_problem(space_form(3, 1, 0), Signature{{1, 1, -1}, 1, 3}, {1.0, 1.0}, 1.0);
    p.initial_frame[1] *= 2.0;
    CHECK_THROWS_AS(integrate_frenet(p), std::invalid_argument);
  }
}
