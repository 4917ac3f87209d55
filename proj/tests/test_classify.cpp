#include "polyfrenet/classify.hpp"
#include "polyfrenet/sweep.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace polyfrenet;

namespace {

ExactHelix exact_helix(std::vector<int> eps, std::vector<Rational> k2) {
  return ExactHelix{Signature::minimal_for(std::move(eps)), std::move(k2)};
}

std::vector<QuadraticSurd> tau_values(const ClassificationResult& r, bool keep_degenerate = false) {
  std::vector<QuadraticSurd> out;
  for (const auto& s : r.solutions)
    if (const auto* v = s.find("tau^2"); v && (keep_degenerate || !s.degenerate)) out.push_back(*v);
  return out;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("two-Frenet examples") {
    const auto surface = classify_2frenet(-1, 1, -1, 3, true);
    REQUIRE(surface.feasible());
    CHECK(*surface.solutions.at(0).find("kappa^2") == QuadraticSurd(2));
    for (int c = 0; c <= 3; ++c) CHECK_FALSE(classify_2frenet(c, 1, -1, 3, true).feasible());

    const auto circle = classify_2frenet(1, 1, 1, 2);
    REQUIRE(circle.feasible());
    CHECK(*circle.solutions.at(0).find("kappa^2") == QuadraticSurd(1));
    CHECK(circle.theorem == "two_frenet_space_form");

    CHECK_THROWS_AS(classify_2frenet(1, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(classify_2frenet(1, 1, 1, 2, true), std::invalid_argument);
  }

  TEST_CASE("triharmonic two-Frenet examples") {
    const auto a = classify_triharmonic_2frenet(1, 1);
    REQUIRE(a.feasible());
    CHECK(*a.solutions.at(0).find("kappa^2") == QuadraticSurd(2));
    CHECK_FALSE(classify_triharmonic_2frenet(1, -1).feasible());
    const auto b = classify_triharmonic_2frenet(-2, -1);
    REQUIRE(b.feasible());
    CHECK(*b.solutions.at(0).find("kappa^2") == QuadraticSurd(4));
    for (int e1 : {-1, 1}) CHECK(tension_field(exact_helix({e1, -1}, {4}), Rational(-2), 3).vanishes());
  }

  TEST_CASE("three-Frenet examples") {
    // flat, Lorentzian frame: only the space-like N case survives, with k^2 = tau^2
    for (int e1 : {-1, 1})
      for (int e2 : {-1, 1}) {
        const int e3 = -e1 * e2;
        for (int r = 2; r <= 5; ++r) {
          const auto res = classify_3frenet(0, e1, e2, e3, r);
          CAPTURE(e1);
          CAPTURE(e2);
          CAPTURE(r);
          CHECK(res.feasible() == (e2 == 1));
        }
      }
    for (int r = 2; r <= 5; ++r) {
      CHECK(three_frenet_is_solution(0, 1, 1, -1, r, Rational(5, 2), Rational(5, 2)));
      CHECK_FALSE(three_frenet_is_solution(0, 1, 1, -1, r, Rational(5, 2), Rational(3, 2)));
    }

    const auto roots = classify_3frenet(1, 1, 1, -1, 3, Rational(2));
    REQUIRE(roots.feasible());
    const auto taus = tau_values(roots);
    REQUIRE(taus.size() == 1);
    CHECK(taus[0] == QuadraticSurd(3));
    CHECK(tau_values(roots, true).front() == QuadraticSurd(0));
    // eps2 (eps1 k^2 + eps3 tau^2)^2 = c (eps1 eps3 tau^2 + 2 k^2)
    CHECK(tension_field(exact_helix({1, 1, -1}, {2, 3}), Rational(1), 3).vanishes());

    for (int r = 3; r <= 5; ++r)
      for (int e1 : {-1, 1}) CHECK_FALSE(classify_3frenet(1, e1, -1, e1, r).feasible());
  }

  TEST_CASE("root collisions at the branch boundaries") {
    for (int r = 3; r <= 5; ++r) {
      // discriminant c^2 + 4 eps2 c (r-2) k^2 vanishes at k^2 = -c / (4 (r-2))
      const Rational c = -1;
      const Rational k2 = -c / (4 * (r - 2));
      const auto res = classify_3frenet(c, 1, 1, -1, r, k2);
      const auto dbl = std::find_if(res.solutions.begin(), res.solutions.end(),
                                    [](const Solution& s) { return s.branch == "double root"; });
      REQUIRE(dbl != res.solutions.end());
      const auto t2 = *dbl->find("tau^2");
      REQUIRE(t2.is_rational());
      CHECK(tension_field(exact_helix({1, 1, -1}, {k2, t2.rational_part()}), c, r).vanishes());

      // at k^2 = c (r-1) the constant term vanishes and one root hits zero
      const Rational c2 = 1;
      const auto edge = classify_3frenet(c2, 1, 1, -1, r, c2 * (r - 1));
      bool zero_root = false;
      for (const auto& s : edge.solutions)
        if (s.find("tau^2") && s.find("tau^2")->sign() == 0) zero_root = s.degenerate;
      CHECK(zero_root);
    }
  }

  TEST_CASE("feasible outputs have vanishing tension") {
    testing::Gen gen(51);
    int checked = 0;
    for (int trial = 0; trial < 1500; ++trial) {
      const int e1 = gen.sign(), e2 = gen.sign(), e3 = gen.sign(), r = gen.integer(2, 5);
      const Rational c = gen.any(3, 2), k2 = gen.positive(10, 4);
      const auto res = classify_3frenet(c, e1, e2, e3, r, k2);
      for (const auto& t2 : tau_values(res)) {
        if (t2.is_rational()) {
          CHECK(tension_field(exact_helix({e1, e2, e3}, {k2, t2.rational_part()}), c, r).vanishes());
        } else {
          const Helix h{Signature::minimal_for({e1, e2, e3}), {std::sqrt(k2.get_d()), std::sqrt(t2.to_double())}};
          const auto t = tension_field(h, c.get_d(), r);
          double worst = 0.0;
          for (double x : t.coeffs.coeffs) worst = std::max(worst, std::abs(x));
          CHECK(worst < 1e-8 * std::max(1.0, std::pow(std::max(k2.get_d(), t2.to_double()), r)));
        }
        ++checked;
      }
    }
    CHECK(checked > 200);
  }

  TEST_CASE("classifier and oracle agree on a coarse grid") {
    SweepSpec spec;
    spec.step = Rational(1, 2);
    spec.max = 5;
    spec.rs = {2, 3, 4, 5, 6};
    const auto summary = run_helix_sweep(spec);
    CHECK(summary.points == sweep_point_count(spec));
    CHECK(summary.all_agree());
    CHECK(summary.classifier_feasible > 0);
  }

  TEST_CASE("biharmonic n-Frenet") {
    for (int n = 4; n <= 6; ++n) {
      std::vector<int> eps(static_cast<std::size_t>(n), 1);
      CHECK_FALSE(classify_nfrenet_biharmonic(Signature::minimal_for(eps), 1).feasible());
    }
    const auto family = classify_nfrenet_biharmonic(Signature::minimal_for({1, 1, 1, 1}), 1, false);
    REQUIRE(family.feasible());
    CHECK_FALSE(family.solutions.at(0).family.empty());

    // k1^2 + k2^2 = 1, k3 = 0 in S^4: the bitension vanishes
    const double k = std::sqrt(0.5);
    FrenetPointData p{{1, 1, 1, 1}, {k, k, 0.0}};
    FrameVector<double> R21(std::vector<double>{0, 1, 0, 0});
    const auto b = n_frenet_bitension(p, R21);
    for (double x : b.coeffs) CHECK(std::abs(x) < 1e-12);
    CHECK(nfrenet_biharmonic_system(p, R21).max_abs() < 1e-12);
    p.k[2] = 0.3;
    CHECK(nfrenet_biharmonic_system(p, R21).max_abs() > 0.1);
  }

  TEST_CASE("triharmonic n-Frenet examples") {
    const auto five = classify_nfrenet_triharmonic(Signature{{1, 1, -1, 1, 1}, 1, 5}, 1, {1, 1, 1, 2});
    CHECK(five.feasible());
    const auto eq5 = nfrenet_triharmonic_equations(Signature{{1, 1, -1, 1, 1}, 1, 5}, 1, {1, 1, 1, 2});
    CHECK(eq5.hold());
    CHECK(eq5.lhs1 == 1);
    CHECK(eq5.lhs2 == 1);

    const auto four = classify_nfrenet_triharmonic(Signature{{1, -1, -1, 1}, 2, 4}, 1, {2, 4, 1});
    CHECK(four.feasible());
    const auto solved = classify_nfrenet_triharmonic(Signature{{1, -1, -1, 1}, 2, 4}, 1, {2, 4});
    REQUIRE(solved.feasible());
    CHECK(*solved.solutions.at(0).find("kappa3^2") == QuadraticSurd(1));
  }

  TEST_CASE("no Riemannian triharmonic 4-Frenet helices") {
    const Signature sig = Signature::minimal_for({1, 1, 1, 1});
    for (int ci = -2; ci <= 2; ++ci)
      for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= 12; ++b) {
          CHECK_FALSE(classify_nfrenet_triharmonic(sig, ci, {ratio(a, 2), ratio(b, 2)}).feasible());
          for (int d = 1; d <= 4; ++d)
            CHECK_FALSE(classify_nfrenet_triharmonic(sig, ci, {ratio(a, 2), ratio(b, 2), ratio(d, 2)}).feasible());
        }
  }

  TEST_CASE("triharmonic classifier agrees with the oracle") {
    testing::Gen gen(52);
    int feasible = 0;
    for (int trial = 0; trial < 4000; ++trial) {
      const int n = gen.integer(4, 5);
      const auto eps = gen.signs(n);
      const Signature sig = Signature::minimal_for(eps);
      const Rational c = gen.any(3, 2);
      std::vector<Rational> k2;
      for (int i = 0; i < n - 2; ++i) k2.push_back(gen.positive(6, 2));
      const auto res = classify_nfrenet_triharmonic(sig, c, k2);
      if (!res.feasible()) continue;
      ++feasible;
      auto full = k2;
      full.push_back(res.solutions.at(0).find("kappa" + std::to_string(n - 1) + "^2")->rational_part());
      CHECK(tension_field(ExactHelix{sig, full}, c, 3).vanishes());
      CHECK(classify_nfrenet_triharmonic(sig, c, full).feasible());
    }
    CHECK(feasible > 30);
  }
}
