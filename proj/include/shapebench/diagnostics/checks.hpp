#pragma once

// Deterministic diagnostic checks over one design + metrics snapshot.
//
// Feasibility: F001 params present, F002 bounds (closed intervals), F003/F004
// artifact paths exist, F005 metrics finite, F006 compatibility token.
// Geometry: G001 near-bound fraction, G002 summed |angle|, G003 scale/width/
// length coupling. Aero: A001 drag decomposition, A002 Cd band, A003 lift
// magnitude, A004 flow-image coverage.
//
// Severities:
//   G001  clamp(0.5 + 2 (fraction - warn_fraction), 0, 1)
//   G002  clamp(S / (2 warn_sum), 0, 1)
//   G003  clamp(coupling / 3, 0, 1)
//   A00x  clamp(excess / threshold, 0, 1)
// Any status other than ok has a positive severity; failed feasibility checks
// and unverifiable (missing) checks report 1.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "shapebench/errors.hpp"
#include "shapebench/json.hpp"
#include "shapebench/param_space.hpp"
#include "shapebench/problems/formulas.hpp"

namespace shapebench {

enum class CheckStatus { ok, warning, issue, error, missing };
enum class Tier { feasibility, geometry, aero };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::ok: return "ok";
    case CheckStatus::warning: return "warning";
    case CheckStatus::issue: return "issue";
    case CheckStatus::error: return "error";
    case CheckStatus::missing: return "missing";
  }
  return "error";
}

inline const char* to_string(Tier t) {
  switch (t) {
    case Tier::feasibility: return "feasibility";
    case Tier::geometry: return "geometry";
    case Tier::aero: return "aero";
  }
  return "aero";
}

inline constexpr CheckStatus kAllStatuses[] = {CheckStatus::ok, CheckStatus::warning, CheckStatus::issue,
                                               CheckStatus::error, CheckStatus::missing};

struct CheckResult {
  std::string check_id;
  Tier tier = Tier::feasibility;
  CheckStatus status = CheckStatus::ok;
  double severity = 0.0;
  std::string message;
  Json value;
  Json threshold;
  std::vector<std::string> evidence_refs;
  Json metadata = Json::object();

  Json to_json() const {
    Json j;
    j["check_id"] = check_id;
    j["tier"] = to_string(tier);
    j["status"] = to_string(status);
    j["severity"] = severity;
    j["message"] = message;
    j["value"] = value;
    j["threshold"] = threshold;
    j["evidence_refs"] = evidence_refs;
    j["metadata"] = metadata;
    return j;
  }
};

struct DiagnosticThresholds {
  double margin_ratio = 0.05;
  double warn_fraction = 0.6;
  double warn_sum = 26.0;
  double warn_score = 2.4;
  double warn_rel_err = 0.02;
  double cd_min = 0.0;
  double cd_max = 1.5;
  double lift_warn_abs = 200000.0;
};

struct CouplingSpec {
  std::string scale;
  double scale_nominal = 1.0;
  std::string width;
  std::string length;
};

/// Which parameters and metrics a task exposes to the checks. A task without
/// a profile gets only the generic checks (F001, F002, F005, G001).
struct DiagnosticsProfile {
  std::vector<std::string> angle_params;
  std::optional<CouplingSpec> coupling;
  std::vector<std::string> required_metrics;
  std::vector<std::string> expected_images;
  std::vector<std::string> required_artifacts;
  std::optional<std::string> compatibility_token;
  DiagnosticThresholds thresholds;

  static DiagnosticsProfile from_json(const Json& j) {
    DiagnosticsProfile p;
    if (j.is_null()) return p;
    if (!j.is_object()) throw ConfigError("diagnostics profile must be an object");
    auto strings = [&](const char* key) {
      return j.contains(key) ? j.at(key).get<std::vector<std::string>>() : std::vector<std::string>{};
    };
    p.angle_params = strings("angle_params");
    p.required_metrics = strings("required_metrics");
    p.expected_images = strings("expected_images");
    p.required_artifacts = strings("required_artifacts");
    if (j.contains("coupling")) {
      const Json& c = j.at("coupling");
      p.coupling = CouplingSpec{c.at("scale").get<std::string>(), c.value("scale_nominal", 1.0),
                                c.at("width").get<std::string>(), c.at("length").get<std::string>()};
    }
    if (j.contains("compatibility_token")) p.compatibility_token = j.at("compatibility_token").get<std::string>();
    if (j.contains("thresholds")) {
      const Json& t = j.at("thresholds");
      auto& d = p.thresholds;
      d.margin_ratio = t.value("margin_ratio", d.margin_ratio);
      d.warn_fraction = t.value("warn_fraction", d.warn_fraction);
      d.warn_sum = t.value("warn_sum", d.warn_sum);
      d.warn_score = t.value("warn_score", d.warn_score);
      d.warn_rel_err = t.value("warn_rel_err", d.warn_rel_err);
      d.cd_min = t.value("cd_min", d.cd_min);
      d.cd_max = t.value("cd_max", d.cd_max);
      d.lift_warn_abs = t.value("lift_warn_abs", d.lift_warn_abs);
    }
    return p;
  }

  bool declares_metric(const std::string& m) const {
    return std::find(required_metrics.begin(), required_metrics.end(), m) != required_metrics.end();
  }
  bool requires_artifact(const std::string& a) const {
    return std::find(required_artifacts.begin(), required_artifacts.end(), a) != required_artifacts.end();
  }
};

/// Everything the checks look at. `design_params` and `metrics` are kept as
/// raw JSON so malformed inputs become check results rather than exceptions.
struct DiagnosticInputs {
  std::string environment;
  std::string design_id;
  std::string design_path;
  std::string case_dir;
  Json design_params = Json::object();
  Json metrics = Json::object();
  std::vector<std::string> images;
  Json model_artifacts = Json::object();
  std::optional<std::string> style;  // overrides the token inferred from base_vtk_path
  Json snapshot;                     // echoed as input_snapshot; built from the fields when null

  static DiagnosticInputs from_snapshot(const Json& s) {
    if (!s.is_object()) throw ConfigError("input snapshot must be a JSON object");
    DiagnosticInputs in;
    auto str = [&](const char* key) {
      return s.contains(key) && s.at(key).is_string() ? s.at(key).get<std::string>() : std::string{};
    };
    in.environment = str("environment");
    in.design_id = str("design_id");
    in.design_path = str("design_path");
    in.case_dir = str("case_dir");
    if (s.contains("design_params")) in.design_params = s.at("design_params");
    if (s.contains("metrics")) in.metrics = s.at("metrics");
    if (s.contains("images")) {
      for (const auto& i : s.at("images")) {
        if (i.is_string()) in.images.push_back(i.get<std::string>());
      }
    }
    if (s.contains("model_artifacts")) in.model_artifacts = s.at("model_artifacts");
    if (s.contains("compatibility_token") && s.at("compatibility_token").is_string()) {
      in.style = s.at("compatibility_token").get<std::string>();
    }
    in.snapshot = s;
    return in;
  }

  Json snapshot_json() const {
    if (!snapshot.is_null()) return snapshot;
    Json s;
    s["environment"] = environment;
    s["design_id"] = design_id;
    s["design_path"] = design_path;
    s["case_dir"] = case_dir;
    s["design_params"] = design_params;
    s["metrics"] = metrics;
    s["images"] = images;
    s["model_artifacts"] = model_artifacts;
    return s;
  }
};

using PathProbe = std::function<bool(const std::string&)>;

inline PathProbe filesystem_probe() {
  return [](const std::string& p) {
    std::error_code ec;
    return std::filesystem::exists(p, ec);
  };
}

namespace detail {

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::optional<double> number_in(const Json& obj, const std::string& key) {
  if (!obj.is_object() || !obj.contains(key)) return std::nullopt;
  const Json& v = obj.at(key);
  if (!v.is_number() || v.is_boolean()) return std::nullopt;
  return v.get<double>();
}

inline std::vector<std::string> design_refs(const DiagnosticInputs& in) {
  std::vector<std::string> r;
  if (!in.design_path.empty()) r.push_back(in.design_path);
  if (!in.case_dir.empty()) r.push_back(in.case_dir);
  return r;
}

inline std::vector<std::string> path_refs(const DiagnosticInputs& in) {
  std::vector<std::string> r;
  if (!in.design_path.empty()) r.push_back(in.design_path);
  return r;
}

inline double bounded(double v) { return std::clamp(v, 0.0, 1.0); }

/// Lower and upper ends of a numeric variable (levels span for discrete).
inline std::pair<double, double> numeric_range(const VariableSpec& v) {
  if (v.kind == VariableKind::discrete) {
    const auto [lo, hi] = std::minmax_element(v.levels.begin(), v.levels.end());
    return {*lo, *hi};
  }
  return {v.lower, v.upper};
}

inline CheckResult not_applicable(std::string id, Tier tier, std::string message) {
  CheckResult c;
  c.check_id = std::move(id);
  c.tier = tier;
  c.message = std::move(message);
  c.value = nullptr;
  c.threshold = nullptr;
  c.metadata["applicable"] = false;
  return c;
}

inline CheckResult missing_inputs(std::string id, Tier tier, std::string message, std::vector<std::string> keys,
                                  std::vector<std::string> refs) {
  CheckResult c;
  c.check_id = std::move(id);
  c.tier = tier;
  c.status = CheckStatus::missing;
  c.severity = 1.0;
  c.message = std::move(message);
  c.value = {{"missing", keys}};
  c.threshold = nullptr;
  c.evidence_refs = std::move(refs);
  return c;
}

}  // namespace detail

// ---- feasibility ----------------------------------------------------------

inline CheckResult check_required_params(const ParamSpace& space, const DiagnosticInputs& in) {
  CheckResult c;
  c.check_id = "F001_required_params_present";
  c.tier = Tier::feasibility;
  std::vector<std::string> missing;
  for (const auto& v : space.variables()) {
    if (!in.design_params.is_object() || !in.design_params.contains(v.name) || in.design_params.at(v.name).is_null()) {
      missing.push_back(v.name);
    }
  }
  c.value = {{"missing", missing}};
  c.threshold = nullptr;
  c.evidence_refs = detail::path_refs(in);
  if (missing.empty()) {
    c.message = "All required parameters present.";
  } else {
    c.status = CheckStatus::issue;
    c.severity = 1.0;
    c.message = "Missing required parameters: " + Json(missing).dump() + ".";
  }
  return c;
}

/// Keys whose values fall outside their closed bounds, are not numbers where
/// numbers are expected, or name no level of a discrete/categorical variable.
inline std::vector<std::string> bound_violations(const ParamSpace& space, const Json& params) {
  std::vector<std::string> bad;
  if (!params.is_object()) return bad;
  for (const auto& v : space.variables()) {
    if (!params.contains(v.name) || params.at(v.name).is_null()) continue;
    const Json& x = params.at(v.name);
    bool ok = false;
    switch (v.kind) {
      case VariableKind::continuous:
        if (x.is_number() && !x.is_boolean()) {
          const double d = x.get<double>();
          ok = std::isfinite(d) && d >= v.lower && d <= v.upper;
        }
        break;
      case VariableKind::discrete:
        if (x.is_number() && !x.is_boolean()) ok = v.level_index(x.get<double>()).has_value();
        break;
      case VariableKind::categorical:
        ok = x.is_string() && std::find(v.labels.begin(), v.labels.end(), x.get<std::string>()) != v.labels.end();
        break;
    }
    if (!ok) bad.push_back(v.name);
  }
  return bad;
}

inline CheckResult check_bounds(const ParamSpace& space, const DiagnosticInputs& in) {
  CheckResult c;
  c.check_id = "F002_param_bounds_respected";
  c.tier = Tier::feasibility;
  const auto bad = bound_violations(space, in.design_params);
  c.value = {{"violations", bad}};
  c.threshold = "within configured bounds";
  c.evidence_refs = detail::design_refs(in);
  if (bad.empty()) {
    c.message = "All parameter values within bounds.";
  } else {
    c.status = CheckStatus::issue;
    c.severity = 1.0;
    c.message = "Parameters outside configured bounds: " + Json(bad).dump() + ".";
  }
  return c;
}

inline CheckResult check_artifact(const std::string& id, const std::string& key, const std::string& label,
                                  const DiagnosticsProfile& profile, const DiagnosticInputs& in, const PathProbe& probe) {
  const bool given = in.model_artifacts.is_object() && in.model_artifacts.contains(key) &&
                     in.model_artifacts.at(key).is_string();
  if (!given) {
    if (!profile.requires_artifact(key)) {
      return detail::not_applicable(id, Tier::feasibility, label + " not required for this task.");
    }
    return detail::missing_inputs(id, Tier::feasibility, label + " path not provided.", {key}, detail::path_refs(in));
  }
  const std::string path = in.model_artifacts.at(key).get<std::string>();
  CheckResult c;
  c.check_id = id;
  c.tier = Tier::feasibility;
  c.value = path;
  c.threshold = nullptr;
  c.evidence_refs = {path};
  if (probe(path)) {
    c.message = label + " exists.";
  } else {
    c.status = CheckStatus::issue;
    c.severity = 1.0;
    c.message = label + " not found.";
  }
  return c;
}

inline CheckResult check_metrics_finite(const DiagnosticsProfile& profile, const DiagnosticInputs& in) {
  CheckResult c;
  c.check_id = "F005_metrics_finite";
  c.tier = Tier::feasibility;
  std::vector<std::string> keys = profile.required_metrics;
  if (keys.empty() && in.metrics.is_object()) {
    for (const auto& [k, v] : in.metrics.items()) keys.push_back(k);
  }
  std::vector<std::string> missing;
  std::vector<std::string> non_finite;
  for (const auto& k : keys) {
    if (!in.metrics.is_object() || !in.metrics.contains(k) || in.metrics.at(k).is_null()) {
      missing.push_back(k);
    } else if (auto x = detail::number_in(in.metrics, k); !x || !std::isfinite(*x)) {
      non_finite.push_back(k);
    }
  }
  c.value = {{"missing", missing}, {"non_finite", non_finite}};
  c.threshold = nullptr;
  c.evidence_refs = detail::design_refs(in);
  if (!non_finite.empty()) {
    c.status = CheckStatus::issue;
    c.severity = 1.0;
    c.message = "Non-finite metrics: " + Json(non_finite).dump() + ".";
  } else if (!missing.empty()) {
    c.status = CheckStatus::missing;
    c.severity = 1.0;
    c.message = "Required metrics missing: " + Json(missing).dump() + ".";
  } else {
    c.message = "All required metrics are finite.";
  }
  return c;
}

/// Body-style token: explicit if given, else the `vtk_<token>` directory of
/// the base geometry path.
inline std::optional<std::string> infer_style(const DiagnosticInputs& in) {
  if (in.style) return in.style;
  if (!in.model_artifacts.is_object() || !in.model_artifacts.contains("base_vtk_path") ||
      !in.model_artifacts.at("base_vtk_path").is_string()) {
    return std::nullopt;
  }
  static const std::regex re("vtk_([A-Za-z0-9]+)");
  std::smatch m;
  const std::string p = in.model_artifacts.at("base_vtk_path").get<std::string>();
  if (std::regex_search(p, m, re)) return m[1].str();
  return std::nullopt;
}

inline CheckResult check_compatibility(const DiagnosticsProfile& profile, const DiagnosticInputs& in) {
  const std::string id = "F006_body_style_norm_compatibility";
  if (!profile.compatibility_token) {
    return detail::not_applicable(id, Tier::feasibility, "No compatibility token declared for this task.");
  }
  const auto style = infer_style(in);
  if (!style) {
    return detail::missing_inputs(id, Tier::feasibility, "Body style could not be inferred.", {"style"},
                                  detail::design_refs(in));
  }
  CheckResult c;
  c.check_id = id;
  c.tier = Tier::feasibility;
  Json nsp = nullptr;
  if (in.model_artifacts.is_object() && in.model_artifacts.contains("norm_stats_path")) {
    nsp = in.model_artifacts.at("norm_stats_path");
  }
  c.value = {{"style", *style}, {"norm_stats_path", nsp}};
  c.threshold = nullptr;
  c.evidence_refs = detail::design_refs(in);
  if (*style == *profile.compatibility_token) {
    c.message = "Norm stats compatible with inferred body style '" + *style + "'.";
  } else {
    c.status = CheckStatus::issue;
    c.severity = 1.0;
    c.message = "Norm stats expect body style '" + *profile.compatibility_token + "' but the design infers '" +
                *style + "'.";
  }
  return c;
}

inline std::vector<CheckResult> check_bounds_and_presence(const ParamSpace& space, const DiagnosticsProfile& profile,
                                                          const DiagnosticInputs& in, const PathProbe& probe) {
  return {check_required_params(space, in),
          check_bounds(space, in),
          check_artifact("F003_base_vtk_exists", "base_vtk_path", "Base VTK", profile, in, probe),
          check_artifact("F004_norm_stats_exists", "norm_stats_path", "Norm stats file", profile, in, probe),
          check_metrics_finite(profile, in),
          check_compatibility(profile, in)};
}

// ---- geometry -------------------------------------------------------------

struct NearBound {
  double fraction = 0.0;
  std::vector<std::string> keys;  // in space order
};

/// A numeric parameter is near a bound iff min(x - l, u - x) <= margin_ratio (u - l).
/// Only numeric variables with numeric values count; labels and `name` do not.
inline NearBound near_bound_fraction(const ParamSpace& space, const Json& params, double margin_ratio) {
  if (!(margin_ratio > 0.0 && margin_ratio < 0.5)) throw ContractError("near_bound_fraction: margin_ratio must lie in (0, 0.5)");
  NearBound nb;
  std::size_t n = 0;
  for (const auto& v : space.variables()) {
    if (v.kind == VariableKind::categorical) continue;
    const auto x = detail::number_in(params, v.name);
    if (!x || !std::isfinite(*x)) continue;
    ++n;
    const auto [lo, hi] = detail::numeric_range(v);
    if (std::min(*x - lo, hi - *x) <= margin_ratio * (hi - lo)) nb.keys.push_back(v.name);
  }
  if (n == 0) throw ContractError("near_bound_fraction: no numeric parameters");
  nb.fraction = static_cast<double>(nb.keys.size()) / static_cast<double>(n);
  return nb;
}

inline CheckResult check_extremeness(const ParamSpace& space, const DiagnosticsProfile& profile, const DiagnosticInputs& in) {
  const auto& t = profile.thresholds;
  const std::string id = "G001_param_extremeness_ratio";
  NearBound nb;
  try {
    nb = near_bound_fraction(space, in.design_params, t.margin_ratio);
  } catch (const ContractError&) {
    return detail::missing_inputs(id, Tier::geometry, "No numeric parameters to assess.", {}, detail::design_refs(in));
  }
  CheckResult c;
  c.check_id = id;
  c.tier = Tier::geometry;
  c.value = {{"near_bound_fraction", nb.fraction}, {"near_bound_keys", nb.keys}};
  c.threshold = {{"warn_fraction", t.warn_fraction}, {"margin_ratio", t.margin_ratio}};
  c.evidence_refs = detail::design_refs(in);
  if (nb.fraction > t.warn_fraction) {
    c.status = CheckStatus::warning;
    c.severity = detail::bounded(0.5 + 2.0 * (nb.fraction - t.warn_fraction));
    c.message = "High fraction of parameters near bounds (" + detail::fixed(nb.fraction, 2) + ").";
  } else {
    c.message = "Fraction of parameters near bounds is acceptable (" + detail::fixed(nb.fraction, 2) + ").";
  }
  return c;
}

inline CheckResult check_angle_stress(const DiagnosticsProfile& profile, const DiagnosticInputs& in) {
  const std::string id = "G002_combined_angle_stress";
  if (profile.angle_params.empty()) {
    return detail::not_applicable(id, Tier::geometry, "No angle parameters declared for this task.");
  }
  std::vector<std::string> missing;
  double sum = 0.0;
  for (const auto& a : profile.angle_params) {
    const auto x = detail::number_in(in.design_params, a);
    if (!x || !std::isfinite(*x)) {
      missing.push_back(a);
    } else {
      sum += std::abs(*x);
    }
  }
  if (!missing.empty()) {
    return detail::missing_inputs(id, Tier::geometry, "Declared angle parameters missing.", missing, detail::design_refs(in));
  }
  const double warn = profile.thresholds.warn_sum;
  CheckResult c;
  c.check_id = id;
  c.tier = Tier::geometry;
  c.value = {{"combined_abs_angle_sum", sum}};
  c.threshold = {{"warn_sum", warn}};
  c.evidence_refs = detail::design_refs(in);
  if (sum > warn) {
    c.status = CheckStatus::warning;
    c.severity = detail::bounded(sum / (2.0 * warn));
    c.message = "Combined angle stress is high (" + detail::fixed(sum, 2) + " deg abs-sum).";
  } else {
    c.message = "Combined angle stress within range (" + detail::fixed(sum, 2) + " deg abs-sum).";
  }
  return c;
}

/// |scale - nominal| / half-range + |width| / half-range + |length| / half-range,
/// each term capped at 1.
inline double coupling_score(double scale, double scale_nominal, double scale_half, double width, double width_half,
                             double length, double length_half) {
  return std::min(std::abs(scale - scale_nominal) / scale_half, 1.0) + std::min(std::abs(width) / width_half, 1.0) +
         std::min(std::abs(length) / length_half, 1.0);
}

inline CheckResult check_coupling(const ParamSpace& space, const DiagnosticsProfile& profile, const DiagnosticInputs& in) {
  const std::string id = "G003_size_width_length_coupling";
  if (!profile.coupling) return detail::not_applicable(id, Tier::geometry, "No scale coupling declared for this task.");
  const auto& cs = *profile.coupling;
  std::vector<std::string> missing;
  std::array<double, 3> x{};
  std::array<double, 3> half{};
  const std::array<const std::string*, 3> names{&cs.scale, &cs.width, &cs.length};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto v = detail::number_in(in.design_params, *names[i]);
    const auto idx = space.index_of(*names[i]);
    if (!v || !std::isfinite(*v) || !idx) {
      missing.push_back(*names[i]);
      continue;
    }
    x[i] = *v;
    const auto [lo, hi] = detail::numeric_range(space.variables()[*idx]);
    half[i] = 0.5 * (hi - lo);
  }
  if (!missing.empty()) {
    return detail::missing_inputs(id, Tier::geometry, "Declared coupling parameters missing.", missing, detail::design_refs(in));
  }
  const double score = coupling_score(x[0], cs.scale_nominal, half[0], x[1], half[1], x[2], half[2]);
  const double warn = profile.thresholds.warn_score;
  CheckResult c;
  c.check_id = id;
  c.tier = Tier::geometry;
  c.value = Json::object();
  c.value[cs.scale] = x[0];
  c.value["abs_" + cs.width] = std::abs(x[1]);
  c.value["abs_" + cs.length] = std::abs(x[2]);
  c.value["coupling_score"] = score;
  c.threshold = {{"warn_score", warn}};
  c.evidence_refs = detail::design_refs(in);
  if (score > warn) {
    c.status = CheckStatus::warning;
    c.severity = detail::bounded(score / 3.0);
    c.message = "Global scale + width/length coupling is aggressive; geometry realism risk increased.";
  } else {
    c.message = "Global scale + width/length coupling within range.";
  }
  return c;
}

inline std::vector<CheckResult> check_geometry(const ParamSpace& space, const DiagnosticsProfile& profile,
                                               const DiagnosticInputs& in) {
  return {check_extremeness(space, profile, in), check_angle_stress(profile, in), check_coupling(space, profile, in)};
}

// ---- aero -----------------------------------------------------------------

inline CheckResult check_drag_decomposition(const DiagnosticsProfile& profile, const DiagnosticInputs& in) {
  const std::string id = "A001_drag_decomposition_consistency";
  if (!profile.declares_metric("drag")) return detail::not_applicable(id, Tier::aero, "No drag decomposition for this task.");
  std::vector<std::string> missing;
  const auto drag = detail::number_in(in.metrics, "drag");
  const auto dp = detail::number_in(in.metrics, "drag_pressure");
  const auto ds = detail::number_in(in.metrics, "drag_shear");
  if (!drag || !std::isfinite(*drag)) missing.push_back("drag");
  if (!dp || !std::isfinite(*dp)) missing.push_back("drag_pressure");
  if (!ds || !std::isfinite(*ds)) missing.push_back("drag_shear");
  if (!missing.empty()) {
    return detail::missing_inputs(id, Tier::aero, "Drag components missing.", missing, detail::design_refs(in));
  }
  const double parts = *dp + *ds;
  const double rel = std::abs(*drag - parts) / std::max(std::abs(*drag), 1e-12);
  const double warn = profile.thresholds.warn_rel_err;
  CheckResult c;
  c.check_id = id;
  c.tier = Tier::aero;
  c.value = {{"drag", *drag}, {"drag_pressure_plus_shear", parts}, {"rel_err", rel}};
  c.threshold = {{"warn_rel_err", warn}};
  c.evidence_refs = detail::design_refs(in);
  if (rel > warn) {
    c.status = CheckStatus::warning;
    c.severity = detail::bounded((rel - warn) / warn);
    c.message = "Drag decomposition inconsistent (rel_err=" + detail::fixed(rel, 5) + ").";
  } else {
    c.message = "Drag decomposition consistent (rel_err=" + detail::fixed(rel, 5) + ").";
  }
  return c;
}

inline CheckResult check_cd_range(const DiagnosticsProfile& profile, const DiagnosticInputs& in) {
  const std::string id = "A002_cd_plausible_range";
  if (!profile.declares_metric("Cd")) return detail::not_applicable(id, Tier::aero, "No drag coefficient for this task.");
  auto cd = detail::number_in(in.metrics, "Cd");
  bool derived = false;
  if (!cd) {
    // fall back to the force decomposition
    const auto dp = detail::number_in(in.metrics, "drag_pressure");
    const auto ds = detail::number_in(in.metrics, "drag_shear");
    if (dp && ds) {
      cd = car_drag_coefficient(*dp, *ds);
      derived = true;
    }
  }
  if (!cd || !std::isfinite(*cd)) {
    return detail::missing_inputs(id, Tier::aero, "Cd missing.", {"Cd"}, detail::design_refs(in));
  }
  const auto& t = profile.thresholds;
  CheckResult c;
  c.check_id = id;
  c.tier = Tier::aero;
  c.value = *cd;
  c.threshold = {{"min", t.cd_min}, {"max", t.cd_max}};
  c.evidence_refs = detail::design_refs(in);
  if (derived) c.metadata["derived_from"] = "drag_pressure + drag_shear";
  const double excess = *cd < t.cd_min ? t.cd_min - *cd : (*cd > t.cd_max ? *cd - t.cd_max : 0.0);
  if (excess > 0.0) {
    c.status = CheckStatus::warning;
    c.severity = detail::bounded(excess / (t.cd_max - t.cd_min));
    c.message = "Cd outside plausible warning band.";
  } else {
    c.message = "Cd within plausible warning band.";
  }
  return c;
}

inline CheckResult check_lift_range(const DiagnosticsProfile& profile, const DiagnosticInputs& in) {
  const std::string id = "A003_lift_plausible_range";
  if (!profile.declares_metric("lift")) return detail::not_applicable(id, Tier::aero, "No lift force for this task.");
  const auto lift = detail::number_in(in.metrics, "lift");
  if (!lift || !std::isfinite(*lift)) {
    return detail::missing_inputs(id, Tier::aero, "Lift missing.", {"lift"}, detail::design_refs(in));
  }
  const double warn = profile.thresholds.lift_warn_abs;
  CheckResult c;
  c.check_id = id;
  c.tier = Tier::aero;
  c.value = *lift;
  c.threshold = {{"warn_abs", warn}};
  c.evidence_refs = detail::design_refs(in);
  if (std::abs(*lift) > warn) {
    c.status = CheckStatus::warning;
    c.severity = detail::bounded((std::abs(*lift) - warn) / warn);
    c.message = "Lift magnitude outside plausible warning range.";
  } else {
    c.message = "Lift magnitude within plausible warning range.";
  }
  return c;
}

inline CheckResult check_images(const DiagnosticsProfile& profile, const DiagnosticInputs& in, const PathProbe& probe) {
  const std::string id = "A004_image_availability_signal";
  if (profile.expected_images.empty()) return detail::not_applicable(id, Tier::aero, "No flow images expected for this task.");
  auto ends_with = [](const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  Json map = Json::object();
  std::vector<std::string> refs;
  std::vector<std::string> absent;
  std::size_t present = 0;
  for (const auto& suffix : profile.expected_images) {
    bool found = false;
    for (const auto& img : in.images) {
      if (ends_with(img, suffix) && probe(img)) {
        found = true;
        refs.push_back(img);
        break;
      }
    }
    map[suffix] = found;
    if (found) {
      ++present;
    } else {
      absent.push_back(suffix);
    }
  }
  const std::size_t total = profile.expected_images.size();
  const double coverage = static_cast<double>(present) / static_cast<double>(total);
  CheckResult c;
  c.check_id = id;
  c.tier = Tier::aero;
  c.value = {{"present", present}, {"total", total}, {"coverage", coverage}, {"suffix_map", map}};
  c.threshold = {{"expected_total", total}};
  c.evidence_refs = refs;
  if (absent.empty()) {
    c.message = "All expected flow images are available.";
  } else {
    c.status = CheckStatus::warning;
    c.severity = detail::bounded(static_cast<double>(total - present) / static_cast<double>(total));
    c.value["missing"] = absent;
    std::string list;
    for (const auto& a : absent) list += (list.empty() ? "" : ", ") + a;
    c.message = "Missing flow images: " + list + ".";
  }
  return c;
}

inline std::vector<CheckResult> check_aero(const DiagnosticsProfile& profile, const DiagnosticInputs& in,
                                           const PathProbe& probe) {
  return {check_drag_decomposition(profile, in), check_cd_range(profile, in), check_lift_range(profile, in),
          check_images(profile, in, probe)};
}

}  // namespace shapebench
