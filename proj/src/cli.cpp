#include "polyfrenet/cli.hpp"

#include "polyfrenet/classify.hpp"
#include "polyfrenet/ruled_surface.hpp"
#include "polyfrenet/sweep.hpp"
#include "polyfrenet/synthesize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

namespace polyfrenet {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SignatureError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_int(s));
  return out;
}

Rational rational(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + ": cannot parse '" + s + "'");
  }
}

std::vector<Rational> rationals(const std::vector<std::string>& v, const char* what) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(rational(s, what));
  return out;
}

Signature signature_of(const RunConfig& cfg) {
  if (cfg.eps.empty()) throw UsageError("--eps is required");
  Signature sig;
  if (cfg.model == "surface") {
    sig = Signature{cfg.eps, cfg.t.value_or(1), cfg.m.value_or(2)};
    if (sig.n() != 2 || cfg.eps[0] * cfg.eps[1] != -1)
      throw SignatureError("curves on a Lorentz surface need eps = (1,-1) or (-1,1)");
  } else if (cfg.m || cfg.t) {
    const auto minimal = Signature::minimal_for(cfg.eps);
    sig = Signature{cfg.eps, cfg.t.value_or(minimal.ambient_index), cfg.m.value_or(minimal.ambient_dim)};
  } else {
    sig = Signature::minimal_for(cfg.eps);
  }
  const auto rep = validate_signature(sig);
  if (!rep.accepted) throw SignatureError(rep.violation);
  return sig;
}

std::vector<std::string> stringify(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json exact_and_decimal(const Rational& q) { return {{"exact", to_string(q)}, {"decimal", format_decimal(q.get_d())}}; }

// ------------------------------------------------------------------ classify

json classify_rw(const RunConfig& cfg) {
  if (cfg.f.empty() || cfg.t0.empty()) throw UsageError("rw model needs --f and --t0");
  const RWModel model = parse_warping(cfg.f, cfg.m.value_or(4), rational(cfg.c, "--c"));
  const Rational t0 = rational(cfg.t0, "--t0");
  const RWCheck chk = rw_r_harmonic_check(model, t0, cfg.r);
  json res{{"theorem", "rw_fiber_geodesic"},
           {"status", chk.proper_r_harmonic ? "feasible" : "infeasible"},
           {"inputs", {{"f", model.description}, {"t0", to_string(t0)}, {"r", std::to_string(cfg.r)}}},
           {"kappa", chk.kappa_exact ? exact_and_decimal(*chk.kappa_exact)
                                     : json{{"decimal", format_decimal(chk.kappa)}}},
           {"kappa_sq", format_decimal(chk.kappa_sq)},
           {"d", format_decimal(chk.d)},
           {"condition", format_decimal(chk.condition)}};
  if (model.lambda) {
    res["lambda"] = to_string(*model.lambda);
    res["exponent_condition"] = to_string(power_law_condition(*model.lambda, cfg.r));
    if (sgn(*model.lambda) != 0) res["deceleration"] = exact_and_decimal(power_law_deceleration(*model.lambda));
  }
  return res;
}

ProductLift product_lift_of(const RunConfig& cfg) {
  if (cfg.eps.size() != 3 || cfg.eps[1] != 1) throw SignatureError("product lifts need eps = (eps1, 1, eps3)");
  if (cfg.kappa_sq.size() != 2) throw UsageError("product model: --kappa-sq takes the fiber pair k_a^2,tau_a^2");
  return ProductLift{rational(cfg.d1_sq, "--d1-sq"), rational(cfg.kappa_sq[0], "--kappa-sq"),
                     rational(cfg.kappa_sq[1], "--kappa-sq"), cfg.eps[0], cfg.eps[2]};
}

json product_json(const RunConfig& cfg, const ProductLift& lift, const ProductCheck& chk) {
  const auto lifted = lift_to_product(lift);
  return {{"theorem", "product_lift_helix"},
          {"status", chk.fiber_holds ? "feasible" : "infeasible"},
          {"inputs",
           {{"c", cfg.c}, {"d1^2", to_string(lift.d1_sq)}, {"eps", join_ints(cfg.eps)},
            {"kappa_alpha^2", to_string(lift.kappa_alpha_sq)}, {"tau_alpha^2", to_string(lift.tau_alpha_sq)},
            {"r", std::to_string(cfg.r)}}},
          {"lifted", {{"kappa^2", exact_and_decimal(lifted.kappa_sq)}, {"tau^2", exact_and_decimal(lifted.tau_sq)},
                      {"frenet_sum", exact_and_decimal(lifted.frenet_sum)}}},
          {"lifted_condition", to_string(chk.lifted)},
          {"fiber_condition", to_string(chk.fiber)},
          {"agree", chk.agree()}};
}

json classify_spaceform(const RunConfig& cfg) {
  const Rational c = rational(cfg.c, "--c");
  const auto k = rationals(cfg.kappa_sq, "--kappa-sq");
  if (cfg.model == "surface") {
    signature_of(cfg);
    return to_json(classify_2frenet(c, cfg.eps[0], cfg.eps[1], cfg.r, true));
  }
  const Signature sig = signature_of(cfg);
  validate_space_form(SpaceForm{sig.ambient_dim, sig.ambient_index, c});
  const int n = sig.n();
  if (n == 2) {
    if (cfg.triharmonic) return to_json(classify_triharmonic_2frenet(c, cfg.eps[1]));
    return to_json(classify_2frenet(c, cfg.eps[0], cfg.eps[1], cfg.r));
  }
  if (n == 3) {
    std::optional<Rational> k2;
    if (!k.empty()) k2 = k[0];
    return to_json(classify_3frenet(c, cfg.eps[0], cfg.eps[1], cfg.eps[2], cfg.triharmonic ? 3 : cfg.r, k2));
  }
  if (n >= 4 && cfg.r == 2 && !cfg.triharmonic) return to_json(classify_nfrenet_biharmonic(sig, c, !cfg.allow_k3_zero));
  if ((n == 4 || n == 5) && (cfg.r == 3 || cfg.triharmonic)) {
    if (k.empty()) throw UsageError("triharmonic n-Frenet classification needs --kappa-sq");
    return to_json(classify_nfrenet_triharmonic(sig, c, k));
  }
  throw Unsupported("no closed-form classification for n = " + std::to_string(n) + ", r = " + std::to_string(cfg.r));
}

CommandOutput cmd_classify(const RunConfig& cfg) {
  CommandOutput out;
  json res;
  if (cfg.model == "rw") {
    res = classify_rw(cfg);
  } else if (cfg.model == "product") {
    const auto lift = product_lift_of(cfg);
    const Rational c = rational(cfg.c, "--c");
    if (sgn(c) == 0) throw Unsupported("product lifts need c != 0");
    const auto chk = product_r_harmonic_check(lift, c, cfg.r);
    res = product_json(cfg, lift, chk);
    if (!chk.agree()) out.exit_code = kExitCheckFailed;
  } else if (cfg.model == "spaceform" || cfg.model == "surface") {
    res = classify_spaceform(cfg);
  } else {
    throw UsageError("unknown model '" + cfg.model + "'");
  }
  out.report["result"] = res;
  return out;
}

// -------------------------------------------------------------------- verify

CommandOutput cmd_verify(const RunConfig& cfg) {
  CommandOutput out;
  json res;
  std::string theorem = "not_applicable", tag;
  bool oracle_zero = false;

  if (cfg.model == "spaceform" || cfg.model == "surface") {
    const Signature sig = signature_of(cfg);
    const Rational c = rational(cfg.c, "--c");
    const auto k = rationals(cfg.kappa_sq, "--kappa-sq");
    const int n = sig.n();
    ExactHelix h{sig, k};
    validate_helix(h);
    const auto tension = tension_field(h, c, cfg.r);
    oracle_zero = tension.vanishes();
    res["tension"] = stringify(tension.coeffs.coeffs);
    res["frame"] = "scaled";
    auto set = [&](bool feasible, std::string t) {
      theorem = feasible ? "feasible" : "infeasible";
      tag = std::move(t);
    };
    if (n == 2) {
      set(two_frenet_is_solution(c, sig.eps[0], sig.eps[1], cfg.r, k[0]),
          cfg.model == "surface" ? "two_frenet_surface" : "two_frenet_space_form");
    } else if (n == 3) {
      set(three_frenet_is_solution(c, sig.eps[0], sig.eps[1], sig.eps[2], cfg.r, k[0], k[1]), "three_frenet_space_form");
    } else if (cfg.r == 2) {
      auto cr = classify_nfrenet_biharmonic(sig, c, true);
      set(cr.feasible(), cr.theorem);
    } else if (cfg.r == 3 && (n == 4 || n == 5)) {
      auto cr = classify_nfrenet_triharmonic(sig, c, k);
      set(cr.feasible(), cr.theorem);
    }
  } else if (cfg.model == "product") {
    const auto lift = product_lift_of(cfg);
    const Rational c = rational(cfg.c, "--c");
    if (sgn(c) == 0) throw Unsupported("product lifts need c != 0");
    const auto chk = product_r_harmonic_check(lift, c, cfg.r);
    const auto t = product_tension_oracle(std::sqrt(lift.d1_sq.get_d()), std::sqrt(lift.kappa_alpha_sq.get_d()),
                                          std::sqrt(lift.tau_alpha_sq.get_d()), lift.eps1, c.get_d(), cfg.r);
    double worst = 0.0;
    for (double v : t.coeffs.coeffs) worst = std::max(worst, std::abs(v));
    oracle_zero = worst <= cfg.tol.residual;
    res["tension_max_abs"] = format_decimal(worst);
    res["frame"] = "product";
    theorem = chk.fiber_holds ? "feasible" : "infeasible";
    tag = "product_lift_helix";
    if (!chk.agree()) theorem = "inconsistent";
  } else if (cfg.model == "rw") {
    if (cfg.f.empty() || cfg.t0.empty()) throw UsageError("rw model needs --f and --t0");
    const RWModel model = parse_warping(cfg.f, cfg.m.value_or(4), rational(cfg.c, "--c"));
    const Rational t0 = rational(cfg.t0, "--t0");
    const auto chk = rw_r_harmonic_check(model, t0, cfg.r);
    if (model.lambda) {
      const Rational& l = *model.lambda;
      const Rational k2 = l * l / (t0 * t0), rho = l * (l - 1) / (t0 * t0);
      const auto t = rw_tension_oracle(k2, 0, rho, cfg.r);
      oracle_zero = t.vanishes() && sgn(l) != 0;
      res["tension"] = stringify(t.coeffs.coeffs);
      res["frame"] = "scaled";
    } else {
      const double t = t0.get_d();
      auto frame = unit_frame<double>({1, -1}, {chk.kappa});
      auto R = rw_frame_curvature(model, t, {false, true}, frame.gram);
      const auto tr = tension_field(frame, R, cfg.r);
      double worst = 0.0;
      for (double v : tr.coeffs.coeffs) worst = std::max(worst, std::abs(v));
      oracle_zero = worst <= cfg.tol.residual && chk.kappa > 0.0;
      res["tension_max_abs"] = format_decimal(worst);
      res["frame"] = "unit";
    }
    theorem = chk.proper_r_harmonic ? "feasible" : "infeasible";
    tag = "rw_fiber_geodesic";
  } else {
    throw UsageError("unknown model '" + cfg.model + "'");
  }

  const bool agree = theorem == "not_applicable" || (theorem == "feasible") == oracle_zero;
  res["oracle"] = oracle_zero ? "zero" : "nonzero";
  res["theorem"] = theorem;
  if (!tag.empty()) res["theorem_tag"] = tag;
  res["agree"] = agree && theorem != "inconsistent";
  out.report["result"] = res;
  if (!res["agree"].get<bool>()) out.exit_code = kExitCheckFailed;
  return out;
}

// ---------------------------------------------------------------- synthesize

CommandOutput cmd_ruled(const RunConfig& cfg) {
  RuledOptions opt;
  opt.k0 = cfg.k0;
  opt.profile.s0 = 0.0;
  opt.profile.s_begin = -cfg.ruled_half_window;
  opt.profile.s_end = cfg.ruled_half_window;
  opt.profile.samples = cfg.samples;
  const auto data = run_ruled_pipeline(opt);
  CommandOutput out;
  std::ostringstream csv;
  write_ruled_csv(csv, data);
  out.csv = csv.str();
  json res = ruled_summary_json(data);
  const bool ok = data.max_residual < 1e-8 && data.max_conservation < 1e-9 && data.lorentz_strip;
  res["checks_passed"] = ok;
  out.report["result"] = res;
  if (!ok) out.exit_code = kExitCheckFailed;
  return out;
}

CommandOutput cmd_synthesize(const RunConfig& cfg) {
  if (cfg.ruled) return cmd_ruled(cfg);
  if (!cfg.auto_frame) throw UsageError("synthesize needs initial data: pass --auto-frame");
  const Signature sig = signature_of(cfg);
  const Rational c = rational(cfg.c, "--c");

  SynthesisProblem p;
  if (cfg.model == "spaceform") {
    SpaceForm sf{sig.ambient_dim, sig.ambient_index, c};
    validate_space_form(sf);
    p.geometry = std::make_shared<SpaceFormModel>(sf);
  } else if (cfg.model == "product") {
    p.geometry = std::make_shared<ProductModel>(sig.ambient_dim, c);
  } else {
    throw Unsupported("synthesis supports the spaceform and product models");
  }
  p.fc.sig = sig;
  if (!cfg.k_fn.empty()) {
    for (const auto& s : cfg.k_fn) p.fc.k.push_back(parse_curvature_function(s));
  } else {
    for (const auto& k : rationals(cfg.kappa_sq, "--kappa-sq")) {
      if (sgn(k) < 0) throw UsageError("squared curvatures must be non-negative");
      p.fc.k.push_back(constant_curvature(std::sqrt(k.get_d())));
    }
  }
  if (static_cast<int>(p.fc.k.size()) != sig.n() - 1)
    throw UsageError("expected " + std::to_string(sig.n() - 1) + " curvatures");
  p.s_begin = cfg.s_begin;
  p.s_end = cfg.s_end;
  p.samples = cfg.samples;
  p.tol = {cfg.tol.ode_rel, cfg.tol.ode_abs, cfg.tol.drift_max};
  p.reorthonormalize_every = cfg.reorthonormalize_every;
  auto_initial_data(p);

  CommandOutput out;
  CurveSolution sol;
  try {
    sol = integrate_frenet(p);
  } catch (const DriftExceeded& e) {
    out.exit_code = kExitDriftExceeded;
    out.report["result"] = {{"error", e.what()}, {"s", e.s()}, {"drift", e.drift()}, {"defect", e.defect()}};
    return out;
  }

  std::vector<std::pair<std::string, std::vector<double>>> extra;
  json residuals = json::object();
  bool ok = true;
  for (int r : cfg.check_r.empty() ? std::vector<int>{cfg.r} : cfg.check_r) {
    auto col = numeric_tension(sol, p.fc, *p.geometry, r);
    double worst = 0.0;
    for (double v : col) worst = std::max(worst, v);
    residuals["tau_" + std::to_string(r)] = worst;
    ok = ok && worst <= cfg.tol.residual;
    extra.emplace_back("tau_" + std::to_string(r), std::move(col));
  }
  std::ostringstream csv;
  write_curve_csv(csv, sol, extra);
  out.csv = csv.str();
  json res = diagnostics_json(sol);
  res["model"] = p.geometry->name();
  res["max_residual"] = residuals;
  res["residual_bound"] = cfg.tol.residual;
  res["checks_passed"] = ok;
  out.report["result"] = res;
  if (!ok) out.exit_code = kExitCheckFailed;
  return out;
}

// --------------------------------------------------------------------- sweep

CommandOutput cmd_sweep(const RunConfig& cfg) {
  CommandOutput out;
  std::ostringstream csv;
  const Rational step = rational(cfg.step, "--step"), max = rational(cfg.max, "--max");
  if (sgn(step) <= 0 || sgn(max) <= 0) throw UsageError("--step and --max must be positive");
  const Rational count_q = max / step;
  if (count_q.get_den() != 1) throw UsageError("--max must be a multiple of --step");
  const std::size_t count = count_q.get_num().get_ui();

  if (cfg.kind == "grid") {
    SweepSpec spec;
    spec.ns = cfg.ns;
    spec.rs = cfg.rs;
    spec.cs = rationals(cfg.cs, "--c-list");
    spec.step = step;
    spec.max = max;
    spec.surface = cfg.surface;
    spec.max_points = cfg.max_points;
    if (!cfg.eps.empty()) {
      spec.signatures = {cfg.eps};
      spec.ns = {static_cast<int>(cfg.eps.size())};
    }
    for (int n : spec.ns)
      if (n != 2 && n != 3) throw Unsupported("grid sweeps cover n = 2 and n = 3");
    write_sweep_header(csv);
    const auto summary = run_helix_sweep(spec, [&](const SweepPoint& p) { write_sweep_row(csv, p); });
    out.report["result"] = to_json(summary);
    out.report["result"]["kind"] = "grid";
    if (!summary.all_agree()) out.exit_code = kExitCheckFailed;
  } else if (cfg.kind == "roots") {
    if (cfg.eps.size() != 3) throw UsageError("roots sweep needs a 3-entry --eps");
    const Rational c = rational(cfg.c, "--c");
    if (count > cfg.max_points) throw GridTooLarge(count);
    csv << "kappa_sq,tau_sq_low,tau_sq_low_decimal,tau_sq_high,tau_sq_high_decimal,branches\n";
    std::size_t collisions = 0;
    for (std::size_t j = 1; j <= count; ++j) {
      const Rational k2 = step * static_cast<unsigned long>(j);
      const auto cr = classify_3frenet(c, cfg.eps[0], cfg.eps[1], cfg.eps[2], cfg.r, k2);
      std::vector<const Solution*> roots;
      std::string branches;
      for (const auto& s : cr.solutions) {
        if (!s.find("tau^2")) continue;
        roots.push_back(&s);
        if (!branches.empty()) branches += ";";
        branches += s.branch;
        if (s.degenerate) branches += " (degenerate)";
        if (s.branch == "double root") {
          roots.push_back(&s);
          ++collisions;
        }
      }
      csv << to_string(k2);
      for (std::size_t i = 0; i < 2; ++i) {
        if (i < roots.size()) {
          const auto& v = *roots[i]->find("tau^2");
          csv << "," << v.to_string() << "," << format_decimal(v.to_double());
        } else {
          csv << ",,";
        }
      }
      csv << ",\"" << branches << "\"\n";
    }
    out.report["result"] = {{"kind", "roots"}, {"rows", count}, {"double_roots", collisions}};
  } else if (cfg.kind == "rw-power") {
    // lambda runs over step, 2 step, ... below max (exclusive), typically (0, 1)
    if (count > cfg.max_points) throw GridTooLarge(count);
    csv << "lambda,r,exponent_condition,feasible,deceleration\n";
    json hits = json::array();
    for (int r : cfg.rs) {
      for (std::size_t j = 1; j < count; ++j) {
        const Rational l = step * static_cast<unsigned long>(j);
        const Rational cond = power_law_condition(l, r);
        const bool feasible = sgn(cond) == 0;
        csv << to_string(l) << "," << r << "," << to_string(cond) << "," << (feasible ? 1 : 0) << ","
            << to_string(power_law_deceleration(l)) << "\n";
        if (feasible) hits.push_back({{"r", r}, {"lambda", to_string(l)}});
      }
    }
    out.report["result"] = {{"kind", "rw-power"}, {"feasible", hits}};
  } else {
    throw UsageError("unknown sweep kind '" + cfg.kind + "'");
  }
  out.csv = csv.str();
  return out;
}

}  // namespace

void apply_tolerance_override(Tolerances& tol, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) return;
  auto number = [](const std::string& s) {
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size() || !(v > 0.0)) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("POLYFRENET_TOL: bad value '" + s + "'");
    }
  };
  if (t.find('=') == std::string::npos) {
    tol.residual = number(t);
    return;
  }
  for (const auto& item : split(t, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("POLYFRENET_TOL: expected key=value, got '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    const double v = number(trim(item.substr(eq + 1)));
    if (key == "ode_rel")
      tol.ode_rel = v;
    else if (key == "ode_abs")
      tol.ode_abs = v;
    else if (key == "drift")
      tol.drift_max = v;
    else if (key == "residual")
      tol.residual = v;
    else
      throw UsageError("POLYFRENET_TOL: unknown key '" + key + "'");
  }
}

json to_json(const RunConfig& cfg) {
  json j{{"command", cfg.command},
         {"model", cfg.model},
         {"c", cfg.c},
         {"eps", cfg.eps},
         {"kappa_sq", cfg.kappa_sq},
         {"r", cfg.r},
         {"triharmonic", cfg.triharmonic},
         {"allow_k3_zero", cfg.allow_k3_zero},
         {"f", cfg.f},
         {"t0", cfg.t0},
         {"d1_sq", cfg.d1_sq},
         {"k_fn", cfg.k_fn},
         {"auto_frame", cfg.auto_frame},
         {"s_begin", cfg.s_begin},
         {"s_end", cfg.s_end},
         {"samples", cfg.samples},
         {"reorthonormalize_every", cfg.reorthonormalize_every},
         {"check_r", cfg.check_r},
         {"ruled", cfg.ruled},
         {"k0", cfg.k0},
         {"ruled_half_window", cfg.ruled_half_window},
         {"tolerances",
          {{"ode_rel", cfg.tol.ode_rel}, {"ode_abs", cfg.tol.ode_abs}, {"drift", cfg.tol.drift_max},
           {"residual", cfg.tol.residual}}},
         {"kind", cfg.kind},
         {"ns", cfg.ns},
         {"rs", cfg.rs},
         {"cs", cfg.cs},
         {"step", cfg.step},
         {"max", cfg.max},
         {"max_points", cfg.max_points},
         {"surface", cfg.surface},
         {"json_out", cfg.json_out},
         {"csv_out", cfg.csv_out}};
  j["m"] = cfg.m ? json(*cfg.m) : json(nullptr);
  j["t"] = cfg.t ? json(*cfg.t) : json(nullptr);
  return j;
}

RunConfig run_config_from_json(const json& j) {
  RunConfig cfg;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("command", cfg.command);
  get("model", cfg.model);
  if (j.contains("m") && !j["m"].is_null()) cfg.m = j["m"].get<int>();
  if (j.contains("t") && !j["t"].is_null()) cfg.t = j["t"].get<int>();
  get("c", cfg.c);
  get("eps", cfg.eps);
  get("kappa_sq", cfg.kappa_sq);
  get("r", cfg.r);
  get("triharmonic", cfg.triharmonic);
  get("allow_k3_zero", cfg.allow_k3_zero);
  get("f", cfg.f);
  get("t0", cfg.t0);
  get("d1_sq", cfg.d1_sq);
  get("k_fn", cfg.k_fn);
  get("auto_frame", cfg.auto_frame);
  get("s_begin", cfg.s_begin);
  get("s_end", cfg.s_end);
  get("samples", cfg.samples);
  get("reorthonormalize_every", cfg.reorthonormalize_every);
  get("check_r", cfg.check_r);
  get("ruled", cfg.ruled);
  get("k0", cfg.k0);
  get("ruled_half_window", cfg.ruled_half_window);
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    t.at("ode_rel").get_to(cfg.tol.ode_rel);
    t.at("ode_abs").get_to(cfg.tol.ode_abs);
    t.at("drift").get_to(cfg.tol.drift_max);
    t.at("residual").get_to(cfg.tol.residual);
  }
  get("kind", cfg.kind);
  get("ns", cfg.ns);
  get("rs", cfg.rs);
  get("cs", cfg.cs);
  get("step", cfg.step);
  get("max", cfg.max);
  get("max_points", cfg.max_points);
  get("surface", cfg.surface);
  get("json_out", cfg.json_out);
  get("csv_out", cfg.csv_out);
  return cfg;
}

RWModel parse_warping(const std::string& text, int m, const Rational& c) {
  static const std::regex power(R"(t\s*\^\s*\(?\s*([-+]?[0-9./eE]+)\s*\)?)");
  static const std::regex expo(R"(exp\(\s*(?:([-+]?[0-9.eE]+)\s*\*\s*)?t\s*\))");
  static const std::regex cosh(R"(cosh\(\s*t\s*\))");
  const std::string s = trim(text);
  std::smatch mt;
  if (std::regex_match(s, mt, power)) return RWModel::power_law(rational(mt[1].str(), "--f exponent"), m, c);
  if (std::regex_match(s, mt, expo)) {
    const double a = mt[1].matched ? std::stod(mt[1].str()) : 1.0;
    return RWModel::exponential(a, m, c);
  }
  if (std::regex_match(s, cosh)) return RWModel::cosh_model(m, c);
  throw UsageError("--f: unsupported warping function '" + text + "'");
}

CurvatureFunction parse_curvature_function(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("curvature function needs kind:args, got '" + text + "'");
  const std::string kind = trim(text.substr(0, colon));
  std::vector<double> args;
  for (const auto& a : split(text.substr(colon + 1), ',')) {
    try {
      args.push_back(std::stod(a));
    } catch (const std::exception&) {
      throw UsageError("curvature function: bad number '" + a + "'");
    }
  }
  if (kind == "const" && args.size() == 1) return constant_curvature(args[0]);
  if (kind == "poly" && !args.empty()) return polynomial_curvature(args);
  if (kind == "sin" && (args.size() == 3 || args.size() == 4))
    return sine_curvature(args[0], args[1], args[2], args.size() == 4 ? args[3] : 0.0);
  throw UsageError("curvature function: cannot read '" + text + "'");
}

CommandOutput execute(const RunConfig& cfg) {
  CommandOutput out;
  try {
    if (cfg.command == "classify")
      out = cmd_classify(cfg);
    else if (cfg.command == "verify")
      out = cmd_verify(cfg);
    else if (cfg.command == "synthesize")
      out = cmd_synthesize(cfg);
    else if (cfg.command == "sweep")
      out = cmd_sweep(cfg);
    else
      throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const SignatureError& e) {
    out = {kExitInvalidSignature, {{"error", e.what()}}, ""};
  } catch (const Unsupported& e) {
    out = {kExitUnsupported, {{"error", e.what()}}, ""};
  } catch (const GridTooLarge& e) {
    out = {kExitUnsupported, {{"error", e.what()}}, ""};
  } catch (const std::invalid_argument& e) {
    out = {kExitUsage, {{"error", e.what()}}, ""};
  } catch (const std::out_of_range& e) {
    out = {kExitUsage, {{"error", e.what()}}, ""};
  } catch (const std::domain_error& e) {
    out = {kExitUsage, {{"error", e.what()}}, ""};
  }
  out.report["command"] = cfg.command;
  out.report["config"] = to_json(cfg);
  out.report["exit_code"] = out.exit_code;
  return out;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polyharmonic Frenet curves in semi-Riemannian space forms"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file; options of a subcommand go under its [section]");

  RunConfig cfg;
  struct Raw {
    std::string eps, kappa_sq, kappa, k_fn, check_r, ns, rs, cs;
    std::optional<int> m, t;
    std::optional<double> ode_rel, ode_abs, drift, residual;
  } raw;

  auto add_common = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--model", cfg.model, "spaceform | surface | product | rw");
    sub->add_option("--m", raw.m, "ambient dimension");
    sub->add_option("--t", raw.t, "ambient index");
    sub->add_option("--c", cfg.c, "sectional curvature (exact rational)");
    sub->add_option("--eps", raw.eps, "frame signs, e.g. 1,1,-1");
    sub->add_option("--kappa-sq", raw.kappa_sq, "squared curvatures, comma separated, exact");
    sub->add_option("--kappa", raw.kappa, "curvatures, comma separated (squared internally)");
    sub->add_option("--r", cfg.r, "order of harmonicity");
    sub->add_option("--f", cfg.f, "warping function: t^(p/q), t^p, exp(t), exp(a*t), cosh(t)");
    sub->add_option("--t0", cfg.t0, "time slice of the warped product");
    sub->add_option("--d1-sq", cfg.d1_sq, "square of the time slope of a product lift");
    sub->add_option("--json-out", cfg.json_out, "write the JSON report here");
    sub->add_option("--csv-out", cfg.csv_out, "write the CSV table here");
    sub->add_option("--ode-rel", raw.ode_rel);
    sub->add_option("--ode-abs", raw.ode_abs);
    sub->add_option("--drift-max", raw.drift);
    sub->add_option("--residual-tol", raw.residual);
  };

  auto* classify = app.add_subcommand("classify", "closed-form classification");
  add_common(classify);
  classify->add_flag("--triharmonic", cfg.triharmonic, "r = 3 shortcut");
  classify->add_flag("--allow-k3-zero", cfg.allow_k3_zero, "admit k3 = 0 in the biharmonic n-Frenet case");

  auto* verify = app.add_subcommand("verify", "tension oracle versus closed form for one helix");
  add_common(verify);

  auto* synth = app.add_subcommand("synthesize", "integrate a curve and check it numerically");
  add_common(synth);
  synth->add_option("--k-fn", raw.k_fn, "curvature functions separated by ';' (const:v, poly:a0,a1,.., sin:a,b,w[,p])");
  synth->add_flag("--auto-frame", cfg.auto_frame, "build the initial point and frame from the model");
  synth->add_option("--s-begin", cfg.s_begin);
  synth->add_option("--s-end", cfg.s_end);
  synth->add_option("--samples", cfg.samples);
  synth->add_option("--reorthonormalize-every", cfg.reorthonormalize_every);
  synth->add_option("--check-r", raw.check_r, "orders whose tension residual is reported");
  synth->add_flag("--ruled", cfg.ruled, "ruled-surface triharmonic profile pipeline");
  synth->add_option("--k0", cfg.k0, "initial curvature of the ruled-surface profile");
  synth->add_option("--half-window", cfg.ruled_half_window, "half length of the ruled-surface window");

  auto* sweep = app.add_subcommand("sweep", "grid sweeps");
  add_common(sweep);
  sweep->add_option("--kind", cfg.kind, "grid | roots | rw-power");
  sweep->add_option("--n", raw.ns, "frame lengths, e.g. 2,3");
  sweep->add_option("--r-list", raw.rs, "orders, e.g. 2,3,4,5");
  sweep->add_option("--c-list", raw.cs, "curvatures, e.g. -2,-1,0,1,2");
  sweep->add_option("--step", cfg.step);
  sweep->add_option("--max", cfg.max);
  sweep->add_option("--max-points", cfg.max_points);
  sweep->add_flag("--surface", cfg.surface, "n = 2 curves on Lorentz surfaces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (const char* env = std::getenv("POLYFRENET_TOL")) apply_tolerance_override(cfg.tol, env);
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.m = raw.m;
    cfg.t = raw.t;
    if (!raw.eps.empty()) cfg.eps = parse_int_list(raw.eps);
    if (!raw.kappa_sq.empty() && !raw.kappa.empty()) throw UsageError("give --kappa-sq or --kappa, not both");
    if (!raw.kappa_sq.empty()) cfg.kappa_sq = split(raw.kappa_sq, ',');
    for (const auto& k : split(raw.kappa, ',')) {
      const Rational q = rational(k, "--kappa");
      cfg.kappa_sq.push_back(to_string(q * q));
    }
    if (!raw.k_fn.empty()) cfg.k_fn = split(raw.k_fn, ';');
    if (!raw.check_r.empty()) cfg.check_r = parse_int_list(raw.check_r);
    if (!raw.ns.empty()) cfg.ns = parse_int_list(raw.ns);
    if (!raw.rs.empty()) cfg.rs = parse_int_list(raw.rs);
    if (!raw.cs.empty()) cfg.cs = split(raw.cs, ',');
    if (raw.ode_rel) cfg.tol.ode_rel = *raw.ode_rel;
    if (raw.ode_abs) cfg.tol.ode_abs = *raw.ode_abs;
    if (raw.drift) cfg.tol.drift_max = *raw.drift;
    if (raw.residual) cfg.tol.residual = *raw.residual;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const CommandOutput res = execute(cfg);
  const std::string report = res.report.dump(2) + "\n";
  auto write_file = [&](const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) {
      err << "error: cannot write " << path << "\n";
      return false;
    }
    f << text;
    return true;
  };

  bool json_on_stdout = true;
  if (!res.csv.empty()) {
    if (cfg.csv_out.empty()) {
      out << res.csv;
      json_on_stdout = false;
    } else if (!write_file(cfg.csv_out, res.csv)) {
      return kExitUsage;
    }
  }
  if (!cfg.json_out.empty()) {
    if (!write_file(cfg.json_out, report)) return kExitUsage;
  } else if (json_on_stdout) {
    out << report;
  } else {
    err << report;
  }
  if (res.report.contains("error")) err << "error: " << res.report["error"].get<std::string>() << "\n";
  return res.exit_code;
}

}  // namespace polyfrenet
