#pragma once

// A small JSON Schema validator covering the keywords the bundle schema uses:
// type, enum, const, required, properties, additionalProperties, items,
// minItems, minimum, maximum, anyOf and local $ref ("#/definitions/...").

#include <algorithm>
#include <string>
#include <vector>

#include "shapebench/errors.hpp"
#include "shapebench/json.hpp"

namespace shapebench {

class SchemaValidator {
 public:
  explicit SchemaValidator(Json schema) : root_(std::move(schema)) {}

  /// Empty when `doc` conforms; otherwise one message per violation.
  std::vector<std::string> validate(const Json& doc) const {
    std::vector<std::string> errs;
    check(root_, doc, "$", errs);
    return errs;
  }

  bool valid(const Json& doc) const { return validate(doc).empty(); }

 private:
  const Json& resolve(const Json& s) const {
    if (!s.is_object() || !s.contains("$ref")) return s;
    const std::string ref = s.at("$ref").get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw ContractError("schema: unsupported $ref " + ref);
    const std::string name = ref.substr(prefix.size());
    if (!root_.contains("definitions") || !root_.at("definitions").contains(name)) {
      throw ContractError("schema: unknown definition " + name);
    }
    return resolve(root_.at("definitions").at(name));
  }

  static bool has_type(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    throw ContractError("schema: unknown type " + t);
  }

  void check(const Json& raw, const Json& v, const std::string& path, std::vector<std::string>& errs) const {
    const Json& s = resolve(raw);
    if (s.is_boolean()) {
      if (!s.get<bool>()) errs.push_back(path + ": not allowed");
      return;
    }
    if (s.contains("type")) {
      const Json& t = s.at("type");
      bool ok = false;
      if (t.is_string()) {
        ok = has_type(v, t.get<std::string>());
      } else {
        for (const auto& x : t) ok = ok || has_type(v, x.get<std::string>());
      }
      if (!ok) {
        errs.push_back(path + ": expected type " + t.dump());
        return;
      }
    }
    if (s.contains("const") && v != s.at("const")) errs.push_back(path + ": expected " + s.at("const").dump());
    if (s.contains("enum")) {
      const auto& e = s.at("enum");
      if (std::find(e.begin(), e.end(), v) == e.end()) errs.push_back(path + ": value not in " + e.dump());
    }
    if (v.is_number()) {
      const double x = v.get<double>();
      if (s.contains("minimum") && x < s.at("minimum").get<double>()) errs.push_back(path + ": below minimum");
      if (s.contains("maximum") && x > s.at("maximum").get<double>()) errs.push_back(path + ": above maximum");
    }
    if (s.contains("anyOf")) {
      bool any = false;
      for (const auto& alt : s.at("anyOf")) {
        std::vector<std::string> sub;
        check(alt, v, path, sub);
        if (sub.empty()) {
          any = true;
          break;
        }
      }
      if (!any) errs.push_back(path + ": matches no alternative");
    }
    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& k : s.at("required")) {
          if (!v.contains(k.get<std::string>())) errs.push_back(path + ": missing key '" + k.get<std::string>() + "'");
        }
      }
      const Json empty = Json::object();
      const Json& props = s.contains("properties") ? s.at("properties") : empty;
      for (const auto& [k, child] : v.items()) {
        if (props.contains(k)) {
          check(props.at(k), child, path + "." + k, errs);
        } else if (s.contains("additionalProperties")) {
          const Json& ap = s.at("additionalProperties");
          if (ap.is_boolean()) {
            if (!ap.get<bool>()) errs.push_back(path + ": unexpected key '" + k + "'");
          } else {
            check(ap, child, path + "." + k, errs);
          }
        }
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s.at("minItems").get<std::size_t>()) {
        errs.push_back(path + ": too few items");
      }
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) check(s.at("items"), v[i], path + "[" + std::to_string(i) + "]", errs);
      }
    }
  }

  Json root_;
};

namespace detail {

inline constexpr const char kEvidenceBundleSchema[] = R"SBSCHEMA({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "shapebench evidence bundle",
  "type": "object",
  "required": ["version", "environment", "design_id", "input_snapshot", "evidence_bundle", "llm_report", "trace", "provenance"],
  "additionalProperties": false,
  "properties": {
    "version": {"const": "0.1.0"},
    "environment": {"type": "string"},
    "design_id": {"type": "string"},
    "input_snapshot": {"type": "object"},
    "evidence_bundle": {
      "type": "object",
      "required": ["environment", "design_id", "feasibility", "geometry", "aero", "summary", "data_quality_notes"],
      "additionalProperties": false,
      "properties": {
        "environment": {"type": "string"},
        "design_id": {"type": "string"},
        "feasibility": {"type": "array", "items": {"$ref": "#/definitions/check"}},
        "geometry": {"type": "array", "items": {"$ref": "#/definitions/check"}},
        "aero": {"type": "array", "items": {"$ref": "#/definitions/check"}},
        "summary": {
          "type": "object",
          "required": ["feasibility", "geometry", "aero"],
          "additionalProperties": false,
          "properties": {
            "feasibility": {"$ref": "#/definitions/counts"},
            "geometry": {"$ref": "#/definitions/counts"},
            "aero": {"$ref": "#/definitions/counts"}
          }
        },
        "data_quality_notes": {"type": "array", "items": {"type": "string"}}
      }
    },
    "llm_report": {
      "type": "object",
      "required": ["diagnostic_status"],
      "properties": {"diagnostic_status": {"type": "string"}}
    },
    "trace": {
      "type": "object",
      "required": ["pipeline_version", "llm_diagnostic_status"],
      "properties": {
        "pipeline_version": {"type": "string"},
        "llm_diagnostic_status": {"type": "string"}
      }
    },
    "provenance": {"type": "object"}
  },
  "definitions": {
    "status": {"enum": ["ok", "warning", "issue", "error", "missing"]},
    "check": {
      "type": "object",
      "required": ["check_id", "tier", "status", "severity", "message", "value", "threshold", "evidence_refs", "metadata"],
      "additionalProperties": false,
      "properties": {
        "check_id": {"type": "string"},
        "tier": {"enum": ["feasibility", "geometry", "aero"]},
        "status": {"$ref": "#/definitions/status"},
        "severity": {"type": "number", "minimum": 0, "maximum": 1},
        "message": {"type": "string"},
        "value": {},
        "threshold": {},
        "evidence_refs": {"type": "array", "items": {"type": "string"}},
        "metadata": {"type": "object"}
      }
    },
    "counts": {
      "type": "object",
      "required": ["ok", "warning", "issue", "error", "missing"],
      "additionalProperties": false,
      "properties": {
        "ok": {"type": "integer", "minimum": 0},
        "warning": {"type": "integer", "minimum": 0},
        "issue": {"type": "integer", "minimum": 0},
        "error": {"type": "integer", "minimum": 0},
        "missing": {"type": "integer", "minimum": 0}
      }
    }
  }
}
)SBSCHEMA";

}  // namespace detail

inline const Json& evidence_bundle_schema() {
  static const Json schema = Json::parse(detail::kEvidenceBundleSchema);
  return schema;
}

inline const SchemaValidator& evidence_bundle_validator() {
  static const SchemaValidator v(evidence_bundle_schema());
  return v;
}

}  // namespace shapebench
