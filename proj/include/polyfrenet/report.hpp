#pragma once

// JSON and CSV output. Decimals carry 15 significant digits; exact values are
// also written as rational strings so reports re-parse without loss.

#include "polyfrenet/classify.hpp"
#include "polyfrenet/ruled_surface.hpp"
#include "polyfrenet/sweep.hpp"
#include "polyfrenet/synthesize.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace polyfrenet {

using json = nlohmann::json;

std::string format_decimal(double x);

/// {"exact": "...", "decimal": "...", "a": ..., "b": ..., "d": ...}
json to_json(const QuadraticSurd& q);
QuadraticSurd surd_from_json(const json& j);

json to_json(const ClassificationResult& r);
ClassificationResult classification_from_json(const json& j);

json diagnostics_json(const CurveSolution& sol);

/// s, x0.., F1_0.., ..., drift, defect, then one column per extra series.
void write_curve_csv(std::ostream& os, const CurveSolution& sol,
                     const std::vector<std::pair<std::string, std::vector<double>>>& extra = {});

void write_ruled_csv(std::ostream& os, const RuledSurfaceData& data);
json ruled_summary_json(const RuledSurfaceData& data);

/// n, eps, r, c, kappa_sq, tau_sq (blank for n = 2), classifier, oracle_zero, agree.
void write_sweep_header(std::ostream& os);
void write_sweep_row(std::ostream& os, const SweepPoint& p);
json to_json(const SweepSummary& s);

std::string join_ints(const std::vector<int>& v, char sep = ',');

}  // namespace polyfrenet
