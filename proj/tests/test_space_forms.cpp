#include "polyfrenet/space_forms.hpp"
#include "polyfrenet/synthesize.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace polyfrenet;

namespace {

// c (<F_b,F_c> F_a - <F_a,F_c> F_b) on a unit frame, written out directly
FrameVector<Rational> direct_curvature(const Rational& c, const std::vector<int>& eps, int a, int b, int cc) {
  FrameVector<Rational> out(static_cast<int>(eps.size()));
  if (b == cc) out[a] += c * eps[b];
  if (a == cc) out[b] -= c * eps[a];
  return out;
}

}  // namespace

TEST_SUITE("space_forms") {
  TEST_CASE("curvature on frame examples") {
    const Signature sig{{1, 1}, 1, 3};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) CHECK(curvature_on_frame(SpaceForm{3, 1, 0}, sig, a, b, c) == FrameVector<Rational>(2));

    const auto r = curvature_on_frame(SpaceForm{3, 1, 1}, sig, 1, 0, 0);
    CHECK(r == FrameVector<Rational>(std::vector<Rational>{0, 1}));
    CHECK(curvature_on_frame(SpaceForm{3, 1, 1}, sig, 1, 1, 0) == FrameVector<Rational>(2));
    CHECK_THROWS_AS(curvature_on_frame(SpaceForm{3, 1, 1}, sig, 2, 0, 0), std::out_of_range);
  }

  TEST_CASE("curvature on frame matches the defining formula") {
    testing::Gen gen(21);
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = gen.integer(2, 6);
      const auto eps = gen.signs(n);
      const Signature sig = Signature::minimal_for(eps);
      const Rational c = gen.any();
      const int a = gen.integer(0, n - 1), b = gen.integer(0, n - 1), cc = gen.integer(0, n - 1);
      CHECK(curvature_on_frame(SpaceForm{sig.ambient_dim, sig.ambient_index, c}, sig, a, b, cc) ==
            direct_curvature(c, eps, a, b, cc));
    }
  }

  TEST_CASE("first Bianchi identity on frame triples") {
    testing::Gen gen(22);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = gen.integer(2, 5);
      const auto eps = gen.signs(n);
      const Rational c = gen.any();
      const auto R = [&](int a, int b, int cc) { return curvature_on_frame<Rational>(c, Signature{eps, 1, n + 1}, a, b, cc); };
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int cc = 0; cc < n; ++cc) CHECK(R(a, b, cc) + R(b, cc, a) + R(cc, a, b) == FrameVector<Rational>(n));
    }
  }

  TEST_CASE("embedded connection") {
    const SpaceForm flat{3, 1, 0};
    CoordVector p = CoordVector::Zero(3), x(3), dx(3);
    x << 1, 2, 3;
    dx << -1, 0.5, 4;
    CHECK(embedded_connection(flat, p, x, dx) == dx);

    // S^2_1 sits in R^3_1 as <x,x> = 1
    const SpaceForm sphere{2, 1, 1};
    const DiagonalMetric g = sphere.embedding_metric();
    CoordVector q(3);
    q << std::sinh(0.3), std::cosh(0.3), 0.0;  // <q,q> = -sinh^2 + cosh^2 = 1
    CoordVector tangent(3);
    tangent << 0, 0, 1;
    CoordVector d(3);
    d << 0.7, -1.2, 2.0;
    const auto out = embedded_connection(sphere, q, tangent, d);
    CHECK(std::abs(inner_product(out, q, g)) < 1e-10);
  }

  TEST_CASE("great circle on S^2_1 stays on the quadric") {
    SynthesisProblem p;
    p.geometry = std::make_shared<SpaceFormModel>(SpaceForm{2, 1, 1});
    p.fc.sig = Signature{{1, -1}, 1, 2};
    p.fc.k = {constant_curvature(0.0)};
    p.s_end = 2.0 * M_PI;
    auto_initial_data(p);
    const auto sol = integrate_frenet(p);
    double worst = 0.0;
    for (const auto& s : sol.samples) worst = std::max(worst, std::abs(p.geometry->inner(s.point, s.point) - 1.0));
    CHECK(worst < 1e-8);
    CHECK(sol.max_defect < 1e-8);
  }

  TEST_CASE("quadric conservation along curved helices") {
    struct Case {
      SpaceForm sf;
      std::vector<int> eps;
      std::vector<double> k;
    };
    const std::vector<Case> cases{
        {{3, 1, 1}, {1, 1, -1}, {0.8, 0.5}},
        {{4, 1, -1}, {1, 1, 1}, {1.5, 0.7}},
        {{3, 1, 2}, {1, 1}, {1.0}},
        {{2, 1, -1}, {1, -1}, {0.5}},
    };
    for (const auto& cs : cases) {
      SynthesisProblem p;
      p.geometry = std::make_shared<SpaceFormModel>(cs.sf);
      p.fc.sig = Signature{cs.eps, cs.sf.t, cs.sf.m};
      for (double k : cs.k) p.fc.k.push_back(constant_curvature(k));
      // ambient coordinates grow exponentially in negative curvature
      p.s_end = cs.sf.c > 0 ? 10.0 : 4.0;
      p.tol = {1e-11, 1e-13, 1e-6};
      auto_initial_data(p);
      CAPTURE(cs.sf.c);
      const auto sol = integrate_frenet(p);
      double worst = 0.0;
      const double target = 1.0 / cs.sf.curvature();
      for (const auto& s : sol.samples) worst = std::max(worst, std::abs(p.geometry->inner(s.point, s.point) - target));
      CAPTURE(p.geometry->name());
      CHECK(worst < 1e-8);
    }
  }
}
