#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rsdlab/cf_decompose.hpp"
#include "rsdlab/montecarlo.hpp"
#include "rsdlab/pgf_decompose.hpp"

namespace rsdlab {

nlohmann::json to_json(const ValidityReport& report);
nlohmann::json to_json(const EvalGrid& grid);
nlohmann::json to_json(const Curve& curve, const std::string& label);
nlohmann::json to_json(const DecompositionReport& report);
nlohmann::json to_json(const StableFactorizationReport& report);
nlohmann::json to_json(const PgfCandidate& candidate);
nlohmann::json to_json(const DiscreteDecompositionReport& report);
nlohmann::json to_json(const PhiIdLimit& limit);
nlohmann::json to_json(const TestResult& result);

// One t column, then re/im columns per labelled curve; the header row
// carries the family descriptors.
void write_curves_csv(
    std::ostream& os, const EvalGrid& grid,
    const std::vector<std::pair<std::string, const std::vector<std::complex<double>>*>>&
        curves);

// index,coefficient rows.
void write_coeffs_csv(std::ostream& os, const TruncSeries& series);

// One value per line.
void write_samples_csv(std::ostream& os, const SampleBatch& batch);

}  // namespace rsdlab
