#include "rsdlab/report_io.hpp"

#include <ostream>

#include "rsdlab/detail/format.hpp"

namespace rsdlab {

using nlohmann::json;

json to_json(const ValidityReport& report) {
  json j{{"check", report.check},
         {"verdict", to_string(report.verdict)},
         {"detail", report.detail},
         {"tolerance", report.tolerance},
         {"resolution", report.resolution}};
  if (std::isfinite(report.evidence)) j["evidence"] = report.evidence;
  if (report.index) j["index"] = *report.index;
  if (report.order) j["order"] = *report.order;
  if (report.location) j["location"] = *report.location;
  return j;
}

json to_json(const EvalGrid& grid) {
  return json{{"kind", to_string(grid.kind())},
              {"points", grid.size()},
              {"min", grid.points().front()},
              {"max", grid.points().back()}};
}

json to_json(const Curve& curve, const std::string& label) {
  std::vector<double> re(curve.values.size()), im(curve.values.size());
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    re[i] = curve.values[i].real();
    im[i] = curve.values[i].imag();
  }
  return json{{"label", label}, {"re", re}, {"im", im}};
}

json to_json(const DecompositionReport& report) {
  return json{
      {"c", report.c},
      {"theta", report.theta},
      {"family", report.family},
      {"phi", report.phi},
      {"grid", to_json(report.f.grid)},
      {"t", report.f.grid.points()},
      {"curves",
       json::array({to_json(report.f, "f"), to_json(report.f_c, "f_c"),
                    to_json(report.f_theta, "f_theta"),
                    to_json(report.composite, "f_c_theta")})},
      {"validity",
       {{"f", to_json(report.f_valid)},
        {"f_c", to_json(report.f_c_valid)},
        {"f_theta", to_json(report.f_theta_valid)},
        {"f_c_theta", to_json(report.composite_valid)},
        {"zero_scan", to_json(report.zero_scan)}}},
      {"all_valid", report.all_valid()}};
}

json to_json(const StableFactorizationReport& report) {
  return json{{"alpha", report.alpha},
              {"lambda", report.lambda},
              {"c", report.c},
              {"max_pointwise_gap", report.max_pointwise_gap},
              {"quotient_cm", to_json(report.quotient_cm)},
              {"pass", report.pass()}};
}

json to_json(const PgfCandidate& candidate) {
  return json{{"descriptor", candidate.candidate.describe()},
              {"support", to_string(candidate.candidate.support())},
              {"coefficients", candidate.candidate.coeffs().coeffs()},
              {"validity", to_json(candidate.validity)},
              {"valid", candidate.valid()}};
}

json to_json(const DiscreteDecompositionReport& report) {
  json j{{"mode", report.mode},
         {"c", report.c},
         {"theta", report.theta},
         {"p_component", to_json(report.p_component)},
         {"q_component", to_json(report.q_component)},
         {"composite", to_json(report.composite)},
         {"all_valid", report.all_valid()}};
  if (report.theta_validity_bound) {
    j["theta_validity_bound"] = *report.theta_validity_bound;
  }
  return j;
}

json to_json(const PhiIdLimit& limit) {
  std::vector<bool> flags(limit.converged.begin(), limit.converged.end());
  return json{{"s", limit.grid.points()},
              {"p", limit.p_values},
              {"r", limit.r_values},
              {"neg_log_r", limit.neg_log_r},
              {"converged", flags},
              {"theta_at_convergence", limit.theta_at_convergence},
              {"all_converged", limit.all_converged()}};
}

json to_json(const TestResult& result) {
  return json{{"check", result.check},
              {"statistic", result.statistic},
              {"threshold", result.threshold},
              {"pass", result.pass},
              {"n_a", result.n_a},
              {"n_b", result.n_b},
              {"alpha", result.alpha},
              {"seed", result.seed},
              {"note", result.note}};
}

void write_curves_csv(
    std::ostream& os, const EvalGrid& grid,
    const std::vector<std::pair<std::string, const std::vector<std::complex<double>>*>>&
        curves) {
  os << "t";
  for (const auto& [label, values] : curves) {
    os << ",re[" << label << "],im[" << label << "]";
  }
  os << "\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << detail::strf("%.17g", grid[i]);
    for (const auto& [label, values] : curves) {
      os << detail::strf(",%.17g,%.17g", (*values)[i].real(), (*values)[i].imag());
    }
    os << "\n";
  }
}

void write_coeffs_csv(std::ostream& os, const TruncSeries& series) {
  os << "index,coefficient\n";
  for (std::size_t i = 0; i < series.order(); ++i) {
    os << i << detail::strf(",%.17g", series[i]) << "\n";
  }
}

void write_samples_csv(std::ostream& os, const SampleBatch& batch) {
  for (double v : batch.values) {
    os << detail::strf("%.17g", v) << "\n";
  }
}

}  // namespace rsdlab
