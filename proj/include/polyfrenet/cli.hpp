#pragma once

// Command-line front end: classify, synthesize, verify, sweep.
//
// Exit codes
//   0  report produced and every requested check passed
//   1  a requested check failed (residual over bound, oracle/theorem disagreement)
//   2  invalid signature or ambient dimensions
//   3  unsupported combination, or sweep grid above the cap
//   4  synthesis aborted: frame drift or model defect over bound
//   5  usage or parse error

#include "polyfrenet/frenet.hpp"
#include "polyfrenet/products_rw.hpp"
#include "polyfrenet/report.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfrenet {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidSignature = 2,
  kExitUnsupported = 3,
  kExitDriftExceeded = 4,
  kExitUsage = 5,
};

struct Tolerances {
  double ode_rel = 1e-10;
  double ode_abs = 1e-12;
  double drift_max = 1e-6;
  double residual = 1e-6;
};

/// Applies POLYFRENET_TOL: either a bare number (residual bound) or a comma list
/// of key=value pairs with keys ode_rel, ode_abs, drift, residual.
void apply_tolerance_override(Tolerances& tol, const std::string& text);

struct RunConfig {
  std::string command;             // classify | synthesize | verify | sweep
  std::string model = "spaceform";  // spaceform | surface | product | rw
  std::optional<int> m;
  std::optional<int> t;
  std::string c = "0";
  std::vector<int> eps;
  std::vector<std::string> kappa_sq;  // exact strings
  int r = 2;
  bool triharmonic = false;
  bool allow_k3_zero = false;

  // warped products
  std::string f;
  std::string t0;
  // Lorentzian products: fiber data sit in kappa_sq as (k_a^2, tau_a^2)
  std::string d1_sq = "0";

  // synthesis
  std::vector<std::string> k_fn;
  bool auto_frame = false;
  double s_begin = 0.0;
  double s_end = 10.0;
  int samples = 201;
  int reorthonormalize_every = 0;
  std::vector<int> check_r;
  bool ruled = false;
  double k0 = 0.5;
  double ruled_half_window = 0.5;
  Tolerances tol;

  // sweeps
  std::string kind = "grid";  // grid | roots | rw-power
  std::vector<int> ns{2, 3};
  std::vector<int> rs{2, 3, 4, 5};
  std::vector<std::string> cs{"-2", "-1", "0", "1", "2"};
  std::string step = "1/4";
  std::string max = "10";
  std::size_t max_points = 2'000'000;
  bool surface = false;

  std::string json_out;
  std::string csv_out;
};

json to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const json& j);

struct CommandOutput {
  int exit_code = kExitOk;
  json report;      // {"command", "config", "result", "exit_code"} or {"error", ...}
  std::string csv;  // curve or sweep table, empty for classify/verify
};

/// Runs one command; never throws for user errors (they map to exit codes).
CommandOutput execute(const RunConfig& cfg);

/// Parses "t^(p/q)", "t^p", "exp(t)", "exp(a*t)", "cosh(t)".
RWModel parse_warping(const std::string& text, int m = 4, const Rational& c = 0);

/// Parses one curvature function: "const:v", "poly:a0,a1,...", "sin:a,b,w[,phase]".
CurvatureFunction parse_curvature_function(const std::string& text);

/// Full entry point used by the executable. Reads POLYFRENET_TOL.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace polyfrenet
