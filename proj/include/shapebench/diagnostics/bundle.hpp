#pragma once

// Evidence-bundle assembly: run the three tiers, tally statuses per tier,
// attach the (stubbed) LLM report slot and validate against the schema.

#include <map>

#include "shapebench/diagnostics/checks.hpp"
#include "shapebench/diagnostics/schema.hpp"
#include "shapebench/problems/environment.hpp"
#include "shapebench/version.hpp"

namespace shapebench {

inline constexpr const char* kPipelineVersion = "shapebench-diagnostics/0.1.0";

struct BundleOptions {
  PathProbe probe = filesystem_probe();
  Json llm_report;  // null: {"diagnostic_status": "skipped"}
  Json provenance = Json::object();
};

struct EvidenceBundle {
  std::string environment;
  std::string design_id;
  Json input_snapshot;
  std::vector<CheckResult> feasibility;
  std::vector<CheckResult> geometry;
  std::vector<CheckResult> aero;
  std::vector<std::string> data_quality_notes;
  Json llm_report;
  Json provenance = Json::object();

  static Json counts(const std::vector<CheckResult>& checks) {
    Json j = Json::object();
    for (auto s : kAllStatuses) j[to_string(s)] = 0;
    for (const auto& c : checks) j[to_string(c.status)] = j[to_string(c.status)].get<int>() + 1;
    return j;
  }

  Json summary() const {
    return {{"feasibility", counts(feasibility)}, {"geometry", counts(geometry)}, {"aero", counts(aero)}};
  }

  /// Worst status over all tiers, ordered ok < warning < missing < issue < error.
  CheckStatus worst_status() const {
    auto rank = [](CheckStatus s) {
      switch (s) {
        case CheckStatus::ok: return 0;
        case CheckStatus::warning: return 1;
        case CheckStatus::missing: return 2;
        case CheckStatus::issue: return 3;
        case CheckStatus::error: return 4;
      }
      return 4;
    };
    CheckStatus worst = CheckStatus::ok;
    for (const auto* tier : {&feasibility, &geometry, &aero}) {
      for (const auto& c : *tier) {
        if (rank(c.status) > rank(worst)) worst = c.status;
      }
    }
    return worst;
  }

  Json to_json() const {
    auto list = [](const std::vector<CheckResult>& v) {
      Json a = Json::array();
      for (const auto& c : v) a.push_back(c.to_json());
      return a;
    };
    Json j;
    j["version"] = kBundleSchemaVersion;
    j["environment"] = environment;
    j["design_id"] = design_id;
    j["input_snapshot"] = input_snapshot;
    Json eb;
    eb["environment"] = environment;
    eb["design_id"] = design_id;
    eb["feasibility"] = list(feasibility);
    eb["geometry"] = list(geometry);
    eb["aero"] = list(aero);
    eb["summary"] = summary();
    eb["data_quality_notes"] = data_quality_notes;
    j["evidence_bundle"] = eb;
    j["llm_report"] = llm_report;
    j["trace"] = {{"pipeline_version", kPipelineVersion},
                  {"llm_diagnostic_status", llm_report.value("diagnostic_status", "skipped")}};
    j["provenance"] = provenance;
    return j;
  }
};

/// Exit code of `diagnose`: 0 all ok, 2 worst is a warning, 3 otherwise.
inline int diagnose_exit_code(CheckStatus worst) {
  switch (worst) {
    case CheckStatus::ok: return 0;
    case CheckStatus::warning: return 2;
    default: return 3;
  }
}

/// Summary counts must equal the per-tier tallies of a serialized bundle.
inline bool summary_consistent(const Json& bundle) {
  const Json& eb = bundle.at("evidence_bundle");
  for (const char* tier : {"feasibility", "geometry", "aero"}) {
    std::map<std::string, int> tally;
    for (const auto& c : eb.at(tier)) ++tally[c.at("status").get<std::string>()];
    for (auto s : kAllStatuses) {
      if (eb.at("summary").at(tier).at(to_string(s)).get<int>() != tally[to_string(s)]) return false;
    }
  }
  return true;
}

inline EvidenceBundle build_evidence_bundle(const ParamSpace& space, const DiagnosticsProfile& profile,
                                            const DiagnosticInputs& in, const BundleOptions& opt = {}) {
  EvidenceBundle b;
  b.environment = in.environment;
  b.design_id = in.design_id;
  b.input_snapshot = in.snapshot_json();
  if (!b.input_snapshot.is_object()) b.input_snapshot = Json::object();
  const PathProbe probe = opt.probe ? opt.probe : filesystem_probe();
  b.feasibility = check_bounds_and_presence(space, profile, in, probe);
  b.geometry = check_geometry(space, profile, in);
  b.aero = check_aero(profile, in, probe);
  if (!in.design_params.is_object()) b.data_quality_notes.push_back("design_params is not a JSON object");
  if (!in.metrics.is_object()) b.data_quality_notes.push_back("metrics is not a JSON object");
  b.llm_report = opt.llm_report.is_object() ? opt.llm_report : Json{{"diagnostic_status", "skipped"}};
  b.provenance = opt.provenance.is_object() ? opt.provenance : Json::object();

  const Json j = b.to_json();
  const auto errs = evidence_bundle_validator().validate(j);
  if (!errs.empty() || !summary_consistent(j)) {
    throw std::logic_error("assembled evidence bundle violates its schema: " + (errs.empty() ? "summary" : errs.front()));
  }
  return b;
}

/// Same, with the space and profile of a catalog task.
inline EvidenceBundle build_evidence_bundle(const ProblemEnvironment& env, const DiagnosticInputs& in,
                                            BundleOptions opt = {}) {
  if (opt.provenance.empty()) opt.provenance = {{"task", env.id()}};
  DiagnosticInputs copy = in;
  if (copy.environment.empty()) copy.environment = env.group();
  return build_evidence_bundle(env.space(), DiagnosticsProfile::from_json(env.diagnostics_profile()), copy, opt);
}

}  // namespace shapebench
