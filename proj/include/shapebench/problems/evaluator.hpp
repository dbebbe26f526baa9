#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "shapebench/errors.hpp"
#include "shapebench/json.hpp"
#include "shapebench/param_space.hpp"

namespace shapebench {

using Metrics = std::map<std::string, double>;

/// One flight or flow condition. Unset fields are simply absent.
struct OperatingPoint {
  std::optional<double> alpha;      // deg
  std::optional<double> mach;
  std::optional<double> reynolds;
  std::optional<double> altitude;   // ft
  std::optional<double> cl_target;
  double weight = 1.0;

  bool operator==(const OperatingPoint&) const = default;

  std::optional<double> field(std::string_view name) const {
    if (name == "alpha") return alpha;
    if (name == "mach") return mach;
    if (name == "reynolds") return reynolds;
    if (name == "altitude") return altitude;
    if (name == "cl_target") return cl_target;
    if (name == "weight") return weight;
    return std::nullopt;
  }

  void validate() const {
    if (!(weight >= 0.0)) throw ConfigError("operating point weight must be >= 0");
    if (!alpha && !mach && !reynolds && !altitude && !cl_target) {
      throw ConfigError("operating point needs at least one condition");
    }
  }

  Json to_json() const {
    Json j = Json::object();
    if (alpha) j["alpha"] = *alpha;
    if (mach) j["mach"] = *mach;
    if (reynolds) j["reynolds"] = *reynolds;
    if (altitude) j["altitude"] = *altitude;
    if (cl_target) j["cl_target"] = *cl_target;
    j["weight"] = weight;
    return j;
  }

  static OperatingPoint from_json(const Json& j) {
    OperatingPoint op;
    auto opt = [&](const char* key) -> std::optional<double> {
      if (j.contains(key) && !j.at(key).is_null()) return j.at(key).get<double>();
      return std::nullopt;
    };
    op.alpha = opt("alpha");
    op.mach = opt("mach");
    op.reynolds = opt("reynolds");
    op.altitude = opt("altitude");
    op.cl_target = opt("cl_target");
    op.weight = j.value("weight", 1.0);
    op.validate();
    return op;
  }
};

/// Produces raw metrics for one design at one operating point.
class Evaluator {
 public:
  virtual ~Evaluator() = default;

  virtual Metrics evaluate(const ParamSpace& space, const DesignPoint& point, const OperatingPoint& op) = 0;

  /// Fresh instance with the same configuration and no shared mutable state.
  virtual std::unique_ptr<Evaluator> clone() const = 0;

  virtual Json describe() const = 0;
};

}  // namespace shapebench
