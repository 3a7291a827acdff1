#pragma once

// Scenario ingestion and report emission.  Scenarios, function specs, space
// specs, sampler and classifier parameters all travel as JSON; sweeps come
// out as CSV.  Both formats are documented in docs/schemas.md.

#include <string>
#include <vector>

#include <json.hpp>

#include "lipop/estimation.hpp"

namespace lipop {

struct Scenario {
    std::string id;
    double alpha = 0.5;
    double beta = 0.5;
    NormedSpace X{1, NormKind::l2};
    NormedSpace Y{1, NormKind::l2};
    AnalyticFn phi = AnalyticFn::identity();
    std::vector<std::vector<AnalyticFn>> psi_rows; // Y.dim rows of X.dim entries
    DiskSampler sampler;
    ClassifierParams classifier;
};

AnalyticFn fn_from_json(const nlohmann::json& j);
nlohmann::json fn_to_json(const AnalyticFn& f);

NormedSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const NormedSpace& s);

DiskSampler sampler_from_json(const nlohmann::json& j);
nlohmann::json sampler_to_json(const DiskSampler& s);

ClassifierParams classifier_from_json(const nlohmann::json& j);
nlohmann::json classifier_to_json(const ClassifierParams& p);

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);
Scenario load_scenario_file(const std::string& path);

// Validates and assembles the operator (including the self-map check).
WcOp build_wcop(const Scenario& s);

// Full analysis: criteria report plus the lower-bound estimate.
nlohmann::json analyze_scenario(const Scenario& s);

// The built-in 30-scenario corpus behind `sweep builtin` and the
// equivalence suite.
std::vector<Scenario> golden_corpus();

std::vector<SweepRow> run_sweep(const std::vector<Scenario>& corpus);
std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace lipop
