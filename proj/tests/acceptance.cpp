// Acceptance run: one line per criterion, non-zero exit if any fails.

#include "polyfrenet/classify.hpp"
#include "polyfrenet/products_rw.hpp"
#include "polyfrenet/ruled_surface.hpp"
#include "polyfrenet/sweep.hpp"
#include "polyfrenet/synthesize.hpp"

#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace polyfrenet;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
};

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

// 1. both example helices have exactly vanishing tritension, each well under a second
Outcome example_helices() {
  Outcome o;
  struct Case {
    const char* name;
    Signature sig;
    std::vector<Rational> k2;
  };
  const Case cases[] = {{"S^5_1 (1,1,-1,1,1)", {{1, 1, -1, 1, 1}, 1, 5}, {1, 1, 1, 2}},
                        {"S^4_2 (1,-1,-1,1)", {{1, -1, -1, 1}, 2, 4}, {2, 4, 1}}};
  std::ostringstream info;
  for (const auto& cs : cases) {
    const auto t0 = Clock::now();
    const auto t = tension_field(ExactHelix{cs.sig, cs.k2}, Rational(1), 3);
    const double dt = seconds_since(t0);
    o.require(validate_signature(cs.sig).accepted, std::string(cs.name) + " signature");
    o.require(t.coeffs == FrameVector<Rational>(cs.sig.n()), std::string(cs.name) + " tau_3 == 0");
    o.require(classify_nfrenet_triharmonic(cs.sig, 1, cs.k2).feasible(), std::string(cs.name) + " classifier");
    o.require(dt < 1.0, std::string(cs.name) + " runtime");
    info << cs.name << " " << dt * 1e3 << " ms  ";
  }
  if (o.pass) o.detail = info.str();
  return o;
}

// 2. closed form versus oracle on the full 2- and 3-Frenet grid
Outcome helix_grid() {
  Outcome o;
  const auto t0 = Clock::now();
  const SweepSpec spec;
  const auto s = run_helix_sweep(spec);
  const double dt = seconds_since(t0);
  o.require(s.points == sweep_point_count(spec), "point count");
  o.require(s.all_agree(), std::to_string(s.points - s.agreements) + " disagreements");
  o.require(dt < 60.0, "runtime " + std::to_string(dt) + " s");
  if (o.pass)
    o.detail = std::to_string(s.agreements) + "/" + std::to_string(s.points) + " agree, " +
               std::to_string(s.classifier_feasible) + " solutions, " + std::to_string(dt) + " s";
  return o;
}

// 3. non-existence certificates
Outcome non_existence() {
  Outcome o;
  std::size_t checked = 0;
  for (int n : {4, 5}) {
    BiharmonicSweepSpec spec;
    spec.n = n;
    const auto s = run_biharmonic_sweep(spec);
    o.require(s.oracle_zero == 0 && s.classifier_feasible == 0 && s.all_agree(),
              "full biharmonic n=" + std::to_string(n));
    checked += s.points;
  }

  // time-like N with eps1 = eps3 in positively curved space forms
  SweepSpec timelike;
  timelike.ns = {3};
  timelike.signatures = {{1, -1, 1}, {-1, -1, -1}};
  timelike.rs = {3, 4, 5};
  timelike.cs = {1, 2};
  const auto t = run_helix_sweep(timelike);
  o.require(t.oracle_zero == 0 && t.classifier_feasible == 0 && t.all_agree(), "time-like normal, c > 0");
  checked += t.points;
  for (int r = 3; r <= 5; ++r)
    for (int e1 : {-1, 1})
      for (int c : {1, 2}) o.require(!classify_3frenet(c, e1, -1, e1, r).feasible(), "time-like verdict");

  // space-like curves on Lorentz surfaces with c >= 0
  SweepSpec surface;
  surface.ns = {2};
  surface.surface = true;
  surface.signatures = {{1, -1}};
  surface.cs = {0, 1, 2};
  const auto u = run_helix_sweep(surface);
  o.require(u.oracle_zero == 0 && u.classifier_feasible == 0 && u.all_agree(), "surface, c >= 0");
  checked += u.points;
  for (int r = 2; r <= 5; ++r)
    for (int c = 0; c <= 2; ++c) o.require(!classify_2frenet(c, 1, -1, r, true).feasible(), "surface verdict");

  if (o.pass) o.detail = std::to_string(checked) + " grid points, zero counterexamples";
  return o;
}

// 4. numeric synthesis checks
Outcome synthesis() {
  Outcome o;
  const auto t0 = Clock::now();

  SynthesisProblem flat;
  flat.geometry = std::make_shared<SpaceFormModel>(SpaceForm{3, 1, 0});
  flat.fc.sig = Signature{{1, 1, -1}, 1, 3};
  flat.fc.k = {constant_curvature(1.0), constant_curvature(1.0)};
  flat.s_begin = 0.0;
  flat.s_end = 10.0;
  flat.tol = {1e-10, 1e-12, 1e-6};
  auto_initial_data(flat);
  const auto a = integrate_frenet(flat);
  o.require(a.max_drift < 1e-8, "flat drift");
  std::ostringstream info;
  info << "flat drift " << a.max_drift;
  for (int r = 2; r <= 4; ++r) {
    const double res = max_of(numeric_tension(a, flat.fc, *flat.geometry, r));
    o.require(res < 1e-6, "flat tau_" + std::to_string(r));
    info << ", tau_" << r << " " << res;
  }

  // S^2_1: the frame components grow like exp(sqrt(3) s), so the span is kept short
  SynthesisProblem quad;
  quad.geometry = std::make_shared<SpaceFormModel>(SpaceForm{2, 1, 1});
  quad.fc.sig = Signature{{-1, 1}, 1, 2};
  quad.fc.k = {constant_curvature(std::sqrt(2.0))};
  quad.s_begin = 0.0;
  quad.s_end = 2.0;
  quad.tol = {1e-10, 1e-12, 1e-6};
  auto_initial_data(quad);
  const auto b = integrate_frenet(quad);
  const double tau3 = max_of(numeric_tension(b, quad.fc, *quad.geometry, 3));
  o.require(b.max_defect < 1e-8, "quadric defect");
  o.require(tau3 < 1e-6, "quadric tau_3");
  info << "; S^2_1 defect " << b.max_defect << ", tau_3 " << tau3;

  const double dt = seconds_since(t0);
  o.require(dt < 10.0, "runtime");
  info << "; " << dt << " s";
  if (o.pass) o.detail = info.str();
  return o;
}

// 5. ruled-surface profile pipeline
Outcome ruled() {
  Outcome o;
  const auto t0 = Clock::now();
  RuledOptions opt;
  opt.k0 = 0.5;
  const auto d = run_ruled_pipeline(opt);
  const double dt = seconds_since(t0);
  o.require(!d.rows.empty(), "non-empty window");
  o.require(d.max_conservation < 1e-9, "conservation");
  o.require(d.max_residual < 1e-8, "residuals");
  o.require(d.k_range > 1e-3, "non-constant profile");
  o.require(d.lorentz_strip, "Lorentz strip");
  o.require(dt < 5.0, "runtime");
  if (o.pass) {
    std::ostringstream info;
    info << "window [" << d.window_begin << ", " << d.window_end << "], conservation " << d.max_conservation
         << ", residual " << d.max_residual << ", k range " << d.k_range << ", " << dt << " s";
    o.detail = info.str();
  }
  return o;
}

// 6. lifted and fiber conditions agree on random admissible tuples
Outcome product_equivalence() {
  Outcome o;
  testing::Gen gen(2024);
  int total = 0, holds = 0;
  while (total < 2000) {
    const int r = gen.integer(2, 5);
    const int eps1 = gen.sign();
    const Rational c = gen.positive(4, 3) * gen.sign();
    ProductLift p{eps1 < 0 ? Rational(1 + gen.positive(6, 4)) : Rational(gen.positive(6, 4) - 1), gen.positive(), gen.positive(), eps1,
                  gen.sign()};
    if (sgn(p.d1_sq) < 0) p.d1_sq = -p.d1_sq;
    if (gen.coin()) {
      // put the fiber helix on the r-harmonic locus
      if (r == 2) {
        if (sgn(c) < 0) continue;
        p.kappa_alpha_sq = c * gen.integer(1, 9) / 10;
        p.tau_alpha_sq = c - p.kappa_alpha_sq;
      } else {
        const Rational S = gen.positive(10, 4);
        p.kappa_alpha_sq = (S * S / c - S) / (r - 2);
        p.tau_alpha_sq = S - p.kappa_alpha_sq;
      }
    }
    ProductCheck chk;
    try {
      chk = product_r_harmonic_check(p, c, r);
    } catch (const std::invalid_argument&) {
      continue;  // not admissible
    }
    ++total;
    holds += chk.fiber_holds;
    const Rational w = p.eps1 + p.d1_sq;
    o.require(chk.agree(), "agreement");
    o.require(chk.lifted == w * w * chk.fiber, "lifted = (eps1 + d1^2)^2 fiber");
    if (!o.pass) break;
  }
  if (o.pass) o.detail = std::to_string(total) + " tuples, " + std::to_string(holds) + " r-harmonic";
  return o;
}

// 7. warped-product normal coefficient and the power-law family
Outcome robertson_walker() {
  Outcome o;
  testing::Gen gen(7);
  int tuples = 0;
  for (int r = 2; r <= 5; ++r) {
    for (int trial = 0; trial < 250; ++trial) {
      const Rational k2 = gen.positive(), K = gen.any(), rho = gen.any();
      const auto t = rw_tension_oracle(k2, K, rho, r);
      o.require(t.coeffs[0] == 0 && t.coeffs[1] == rw_tension_normal_scaled(k2, r, rho), "oracle vs normal form");
      ++tuples;
    }
    for (int q = 1; q <= 60; ++q)
      for (int p = 1; p < q; ++p) {
        const Rational lambda = ratio(p, q);
        if (lambda.get_den() != static_cast<unsigned>(q)) continue;
        const bool zero = sgn(power_law_condition(lambda, r)) == 0;
        o.require(zero == (lambda == ratio(r - 1, r)), "power-law zero set");
        const Rational t0 = gen.positive();
        const auto tension = rw_tension_oracle(lambda * lambda / (t0 * t0), 0, lambda * (lambda - 1) / (t0 * t0), r);
        o.require(tension.vanishes() == zero, "power-law oracle");
      }
    o.require(power_law_deceleration(ratio(r - 1, r)) == ratio(1, r - 1), "deceleration");
    o.require(rw_r_harmonic_check(RWModel::power_law(ratio(r - 1, r)), Rational(3), r).proper_r_harmonic,
              "power-law check");
  }
  if (o.pass) o.detail = std::to_string(tuples) + " exact tuples, power laws exact at lambda = (r-1)/r";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 example helices have zero tritension", example_helices},
      {"2 classifier/oracle grid equivalence", helix_grid},
      {"3 non-existence certificates", non_existence},
      {"4 synthesis drift, defect and residuals", synthesis},
      {"5 ruled-surface profile pipeline", ruled},
      {"6 product lift equivalence", product_equivalence},
      {"7 warped-product tension and power laws", robertson_walker},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += !o.pass;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
