#include "polyfrenet/report.hpp"

#include <cmath>
#include <cstdio>

namespace polyfrenet {

std::string format_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

json to_json(const QuadraticSurd& q) {
  return {{"exact", q.to_string()},
          {"decimal", format_decimal(q.to_double())},
          {"a", to_string(q.rational_part())},
          {"b", to_string(q.surd_coefficient())},
          {"d", to_string(q.radicand())}};
}

QuadraticSurd surd_from_json(const json& j) {
  return QuadraticSurd(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()),
                       parse_rational(j.at("d").get<std::string>()));
}

json to_json(const ClassificationResult& r) {
  json sols = json::array();
  for (const auto& s : r.solutions) {
    json values = json::object();
    for (const auto& [k, v] : s.values) values[k] = to_json(v);
    json js{{"values", values}, {"degenerate", s.degenerate}, {"branch", s.branch}};
    if (!s.family.empty()) js["family"] = s.family;
    sols.push_back(js);
  }
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  json out{{"theorem", r.theorem}, {"status", to_string(r.status)}, {"inputs", inputs}, {"solutions", sols}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

ClassificationResult classification_from_json(const json& j) {
  ClassificationResult r;
  r.theorem = j.at("theorem").get<std::string>();
  r.status = j.at("status").get<std::string>() == "feasible" ? Status::feasible : Status::infeasible;
  // inputs are stored as an object, which orders keys; keep that order
  for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
  for (const auto& js : j.at("solutions")) {
    Solution s;
    for (const auto& [k, v] : js.at("values").items()) s.values.emplace_back(k, surd_from_json(v));
    s.degenerate = js.at("degenerate").get<bool>();
    s.branch = js.at("branch").get<std::string>();
    if (js.contains("family")) s.family = js["family"].get<std::string>();
    r.solutions.push_back(std::move(s));
  }
  if (j.contains("note")) r.note = j["note"].get<std::string>();
  return r;
}

json diagnostics_json(const CurveSolution& sol) {
  json re = json::array();
  for (const auto& e : sol.reorthonormalizations) re.push_back({{"s", e.s}, {"correction", e.correction}});
  return {{"samples", sol.samples.size()},
          {"eps", sol.eps},
          {"max_drift", sol.max_drift},
          {"max_defect", sol.max_defect},
          {"reorthonormalizations", re}};
}

void write_curve_csv(std::ostream& os, const CurveSolution& sol,
                     const std::vector<std::pair<std::string, std::vector<double>>>& extra) {
  if (sol.samples.empty()) return;
  const auto dim = sol.samples.front().point.size();
  const auto n = sol.samples.front().frame.size();
  os << "s";
  for (Eigen::Index i = 0; i < dim; ++i) os << ",x" << i;
  for (std::size_t f = 0; f < n; ++f)
    for (Eigen::Index i = 0; i < dim; ++i) os << ",F" << f + 1 << "_" << i;
  os << ",drift,defect";
  for (const auto& [name, _] : extra) os << "," << name;
  os << "\n";
  for (std::size_t j = 0; j < sol.samples.size(); ++j) {
    const auto& smp = sol.samples[j];
    os << format_decimal(smp.s);
    for (Eigen::Index i = 0; i < dim; ++i) os << "," << format_decimal(smp.point[i]);
    for (const auto& f : smp.frame)
      for (Eigen::Index i = 0; i < dim; ++i) os << "," << format_decimal(f[i]);
    os << "," << format_decimal(smp.drift) << "," << format_decimal(smp.defect);
    for (const auto& [_, col] : extra) os << "," << format_decimal(col.at(j));
    os << "\n";
  }
}

void write_ruled_csv(std::ostream& os, const RuledSurfaceData& data) {
  os << "s,k,k1,k2,k3,k4,tau_sq,tau,conservation,res1,res2\n";
  for (const auto& row : data.rows) {
    os << format_decimal(row.s);
    for (double d : row.k) os << "," << format_decimal(d);
    os << "," << format_decimal(row.tau_sq) << "," << format_decimal(std::sqrt(row.tau_sq)) << ","
       << format_decimal(row.conservation) << "," << format_decimal(row.residual[0]) << ","
       << format_decimal(row.residual[1]) << "\n";
  }
}

json ruled_summary_json(const RuledSurfaceData& data) {
  return {{"eps", data.eps},
          {"window", {data.window_begin, data.window_end}},
          {"delta", data.delta},
          {"rows", data.rows.size()},
          {"max_conservation_error", data.max_conservation},
          {"max_residual", data.max_residual},
          {"k_range", data.k_range},
          {"lorentz_strip", data.lorentz_strip}};
}

void write_sweep_header(std::ostream& os) { os << "n,eps,r,c,kappa_sq,tau_sq,classifier,oracle_zero,agree\n"; }

void write_sweep_row(std::ostream& os, const SweepPoint& p) {
  os << p.eps.size() << ",\"" << join_ints(p.eps) << "\"," << p.r << "," << to_string(p.c) << ","
     << to_string(p.kappa_sq.at(0)) << ",";
  if (p.kappa_sq.size() > 1) os << to_string(p.kappa_sq[1]);
  os << "," << (p.classifier ? 1 : 0) << "," << (p.oracle ? 1 : 0) << "," << (p.classifier == p.oracle ? 1 : 0)
     << "\n";
}

json to_json(const SweepSummary& s) {
  json mism = json::array();
  for (const auto& m : s.mismatches) {
    json k = json::array();
    for (const auto& v : m.kappa_sq) k.push_back(to_string(v));
    mism.push_back({{"eps", m.eps}, {"r", m.r}, {"c", to_string(m.c)}, {"kappa_sq", k},
                    {"classifier", m.classifier}, {"oracle_zero", m.oracle}});
  }
  return {{"points", s.points},
          {"agreements", s.agreements},
          {"classifier_feasible", s.classifier_feasible},
          {"oracle_zero", s.oracle_zero},
          {"overflow_fallbacks", s.overflow_fallbacks},
          {"mismatches", mism}};
}

}  // namespace polyfrenet
