#include "polyfrenet/ruled_surface.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace polyfrenet;

TEST_SUITE("ruled_surface") {
  TEST_CASE("first fundamental form") {
    const auto along = first_fundamental_form(0.0, 1.3, 0.4, -1, 1, 1);
    CHECK(along.E == -1.0);
    CHECK(along.F == 0.0);
    CHECK(along.G == 1.0);

    const auto off = first_fundamental_form(0.1, 1.0, 1.0, -1, 1, 1);
    CHECK(off.E == doctest::Approx(-1.2));
    CHECK(off.F == 0.0);
    CHECK(off.G == 1.0);
  }

  TEST_CASE("gauss curvature along the base curve") {
    CHECK(gauss_curvature_along_gamma(0.0) == 0.0);
    CHECK(gauss_curvature_along_gamma(2.0) == 4.0);
    CHECK(gauss_curvature_along_gamma(-2.0) == 4.0);
  }

  TEST_CASE("profile starts on the first integral") {
    const auto prof = solve_profile(0.5);
    const auto it = std::find_if(prof.begin(), prof.end(), [](const ProfileSample& p) { return p.s == 0.0; });
    REQUIRE(it != prof.end());
    CHECK(it->d[0] == 0.5);
    CHECK(it->d[1] == doctest::Approx(std::sqrt((1.0 - 0.0625) / 5.0)));
    CHECK(it->d[1] == doctest::Approx(0.43301).epsilon(1e-5));
  }

  TEST_CASE("profile conservation and ODE relation") {
    testing::Gen gen(71);
    for (int trial = 0; trial < 20; ++trial) {
      const double k0 = gen.real(0.1, 0.8);
      ProfileOptions opt;
      opt.s0 = gen.real(-1.0, 1.0);
      opt.s_begin = opt.s0 - gen.real(0.1, 1.0);
      opt.s_end = opt.s0 + gen.real(0.1, 1.0);
      const auto prof = solve_profile(k0, opt);
      REQUIRE(prof.size() >= static_cast<std::size_t>(opt.samples));
      for (const auto& p : prof) {
        const double k = p.d[0], k1 = p.d[1];
        CHECK(std::abs(5.0 * k1 * k1 + k * k * k * k - 1.0) < 1e-9);
        CHECK(std::abs(conservation_law(k, k1, 0.0, 1.0)) < 1e-9);
        CHECK(std::abs(p.d[2] + 0.4 * k * k * k) < 1e-9);
        CHECK(std::abs(p.d[3] + 1.2 * k * k * k1) < 1e-9);
      }
    }
    CHECK_THROWS_AS(solve_profile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_profile(0.9), std::invalid_argument);
  }

  TEST_CASE("torsion from the profile") {
    CHECK(torsion_from_profile(0.5, -1, 1) == doctest::Approx(5.5125));
    CHECK(torsion_from_profile(std::pow(0.5, 0.25), -1, 1) == 0.0);
    // eps = (1, 1): denominator 60 k^2, positive torsion only below the boundary
    CHECK(torsion_from_profile(0.5, 1, 1) == doctest::Approx(63.0 * 0.875 / (60.0 * 0.25)));
    CHECK_THROWS_AS(torsion_from_profile(0.9, 1, 1), std::domain_error);
    CHECK_THROWS_AS(torsion_from_profile(0.5, 1, -1), std::domain_error);
  }

  TEST_CASE("residual examples") {
    const double k = 0.7;
    const auto flat = triharmonic_residual({k, 0.0, 0.0, 0.0, 0.0}, 0.0, -1, 1);
    CHECK(flat[0] == 0.0);
    CHECK(flat[1] == doctest::Approx(std::pow(k, 5)));
  }

  TEST_CASE("pipeline") {
    const auto data = run_ruled_pipeline();
    REQUIRE_FALSE(data.rows.empty());
    CHECK(data.max_conservation < 1e-9);
    CHECK(data.max_residual < 1e-8);
    CHECK(data.k_range > 1e-3);
    CHECK(data.lorentz_strip);
    CHECK(data.delta > 0.0);
    CHECK(data.window_begin <= 0.0);
    CHECK(data.window_end >= 0.0);

    for (const auto& row : data.rows) {
      CHECK(row.tau_sq > 1e-6);
      CHECK(std::abs(row.residual[0]) < 1e-8);
      CHECK(std::abs(row.residual[1]) < 1e-8);
      // independent look at the strip: E G < 0 for |v| <= delta
      for (int i = -4; i <= 4; ++i) {
        const double v = data.delta * i / 4.0;
        const auto I = first_fundamental_form(v, row.k[0], std::sqrt(row.tau_sq), -1, 1, 1);
        CHECK(I.E * I.G < 0.0);
      }
    }
  }

  TEST_CASE("pipeline from other starting curvatures") {
    for (double k0 : {0.3, 0.6, 0.8}) {
      RuledOptions opt;
      opt.k0 = k0;
      const auto data = run_ruled_pipeline(opt);
      CAPTURE(k0);
      CHECK(data.max_residual < 1e-8);
      CHECK(data.max_conservation < 1e-9);
    }
  }
}
