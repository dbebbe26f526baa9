#pragma once

// Mixed design spaces.
//
// A ParamSpace is an ordered list of continuous, discrete and categorical
// variables. Optimizers never see raw values: they work on the relaxed unit
// cube, where
//   continuous  x        -> (x - lower) / (upper - lower)
//   discrete    level i  -> i / (L - 1)          (index, not value)
//   categorical level i  -> one-hot block of width L
// Decoding takes the argmax of each one-hot block (lowest index wins ties)
// and the nearest level index for discrete variables (lower index wins ties).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shapebench/errors.hpp"
#include "shapebench/json.hpp"
#include "shapebench/rng.hpp"

namespace shapebench {

enum class VariableKind { continuous, discrete, categorical };

inline const char* to_string(VariableKind k) {
  switch (k) {
    case VariableKind::continuous: return "continuous";
    case VariableKind::discrete: return "discrete";
    case VariableKind::categorical: return "categorical";
  }
  return "?";
}

inline VariableKind parse_variable_kind(const std::string& s) {
  if (s == "continuous") return VariableKind::continuous;
  if (s == "discrete") return VariableKind::discrete;
  if (s == "categorical") return VariableKind::categorical;
  throw SpaceError("unknown variable kind '" + s + "'");
}

struct VariableSpec {
  std::string name;
  VariableKind kind = VariableKind::continuous;
  double lower = 0.0;
  double upper = 1.0;
  std::vector<double> levels;         // discrete
  std::vector<std::string> labels;    // categorical
  std::string unit;

  static VariableSpec continuous(std::string name, double lower, double upper, std::string unit = {}) {
    VariableSpec v;
    v.name = std::move(name);
    v.kind = VariableKind::continuous;
    v.lower = lower;
    v.upper = upper;
    v.unit = std::move(unit);
    return v;
  }

  static VariableSpec discrete(std::string name, std::vector<double> levels, std::string unit = {}) {
    VariableSpec v;
    v.name = std::move(name);
    v.kind = VariableKind::discrete;
    v.levels = std::move(levels);
    v.unit = std::move(unit);
    return v;
  }

  static VariableSpec categorical(std::string name, std::vector<std::string> labels, std::string unit = {}) {
    VariableSpec v;
    v.name = std::move(name);
    v.kind = VariableKind::categorical;
    v.labels = std::move(labels);
    v.unit = std::move(unit);
    return v;
  }

  bool is_numeric() const { return kind != VariableKind::categorical; }

  std::size_t level_count() const {
    switch (kind) {
      case VariableKind::continuous: return 0;
      case VariableKind::discrete: return levels.size();
      case VariableKind::categorical: return labels.size();
    }
    return 0;
  }

  /// Number of unit-cube coordinates this variable occupies.
  std::size_t relaxed_width() const { return kind == VariableKind::categorical ? labels.size() : 1; }

  /// Index of a discrete level equal to `value` (relative tolerance 1e-12).
  std::optional<std::size_t> level_index(double value) const {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (std::abs(levels[i] - value) <= 1e-12 * std::max(1.0, std::abs(levels[i]))) return i;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> label_index(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
  }

  void validate() const {
    if (name.empty()) throw SpaceError("variable with empty name");
    if (name == "name") throw SpaceError("'name' is reserved for design metadata");
    switch (kind) {
      case VariableKind::continuous:
        if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper)) {
          throw SpaceError("variable '" + name + "': need finite lower < upper");
        }
        break;
      case VariableKind::discrete: {
        if (levels.size() < 2) throw SpaceError("variable '" + name + "': need at least 2 levels");
        for (std::size_t i = 0; i < levels.size(); ++i) {
          if (!std::isfinite(levels[i])) throw SpaceError("variable '" + name + "': non-finite level");
          for (std::size_t j = 0; j < i; ++j) {
            if (levels[i] == levels[j]) throw SpaceError("variable '" + name + "': duplicate level");
          }
        }
        break;
      }
      case VariableKind::categorical: {
        if (labels.size() < 2) throw SpaceError("variable '" + name + "': need at least 2 levels");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size()) throw SpaceError("variable '" + name + "': duplicate level");
        break;
      }
    }
  }
};

using Value = std::variant<double, std::string>;

/// A named assignment of values to the variables of a ParamSpace.
struct DesignPoint {
  std::string name;
  std::map<std::string, Value> values;

  bool operator==(const DesignPoint&) const = default;

  double number(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw SpaceError("design has no value for '" + key + "'");
    if (const auto* d = std::get_if<double>(&it->second)) return *d;
    throw SpaceError("value of '" + key + "' is not numeric");
  }

  const std::string& label(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw SpaceError("design has no value for '" + key + "'");
    if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
    throw SpaceError("value of '" + key + "' is not a label");
  }
};

/// Parses the design-file shape: an object of variable -> value plus an
/// optional string `name`. Numbers become doubles, strings become labels.
inline DesignPoint design_from_json(const Json& j) {
  if (!j.is_object()) throw SpaceError("design must be a JSON object");
  DesignPoint p;
  for (const auto& [key, val] : j.items()) {
    if (key == "name") {
      if (!val.is_string()) throw SpaceError("design 'name' must be a string");
      p.name = val.get<std::string>();
    } else if (val.is_number()) {
      p.values[key] = val.get<double>();
    } else if (val.is_string()) {
      p.values[key] = val.get<std::string>();
    } else if (val.is_boolean()) {
      p.values[key] = std::string(val.get<bool>() ? "true" : "false");
    } else {
      throw SpaceError("design value for '" + key + "' must be a number or string");
    }
  }
  return p;
}

class ParamSpace {
 public:
  ParamSpace() = default;

  explicit ParamSpace(std::vector<VariableSpec> variables) : variables_(std::move(variables)) {
    std::set<std::string> names;
    for (const auto& v : variables_) {
      v.validate();
      if (!names.insert(v.name).second) throw SpaceError("duplicate variable name '" + v.name + "'");
      relaxed_dim_ += v.relaxed_width();
    }
  }

  const std::vector<VariableSpec>& variables() const { return variables_; }
  std::size_t size() const { return variables_.size(); }
  std::size_t relaxed_dim() const { return relaxed_dim_; }

  std::size_t count(VariableKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(variables_.begin(), variables_.end(), [kind](const auto& v) { return v.kind == kind; }));
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (variables_[i].name == name) return i;
    }
    return std::nullopt;
  }

  const VariableSpec& at(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw SpaceError("unknown variable '" + name + "'");
    return variables_[*i];
  }

  /// Throws SpaceError unless `p` assigns exactly one in-domain value to every variable.
  void validate(const DesignPoint& p) const {
    for (const auto& [key, val] : p.values) {
      if (!index_of(key)) throw SpaceError("unknown variable '" + key + "'");
    }
    for (const auto& v : variables_) {
      auto it = p.values.find(v.name);
      if (it == p.values.end()) throw SpaceError("missing value for '" + v.name + "'");
      check_value(v, it->second);
    }
  }

  std::vector<double> normalize(const DesignPoint& p) const {
    validate(p);
    std::vector<double> u;
    u.reserve(relaxed_dim_);
    for (const auto& v : variables_) {
      const Value& val = p.values.at(v.name);
      switch (v.kind) {
        case VariableKind::continuous:
          u.push_back((std::get<double>(val) - v.lower) / (v.upper - v.lower));
          break;
        case VariableKind::discrete: {
          const auto idx = *v.level_index(std::get<double>(val));
          u.push_back(static_cast<double>(idx) / static_cast<double>(v.levels.size() - 1));
          break;
        }
        case VariableKind::categorical: {
          const auto idx = *v.label_index(std::get<std::string>(val));
          for (std::size_t i = 0; i < v.labels.size(); ++i) u.push_back(i == idx ? 1.0 : 0.0);
          break;
        }
      }
    }
    return u;
  }

  DesignPoint denormalize(std::span<const double> u, std::string name = {}) const {
    if (u.size() != relaxed_dim_) {
      throw SpaceError("unit vector has length " + std::to_string(u.size()) + ", space needs " +
                       std::to_string(relaxed_dim_));
    }
    for (double x : u) {
      if (!std::isfinite(x)) throw SpaceError("non-finite unit-cube component");
    }
    DesignPoint p;
    p.name = std::move(name);
    std::size_t k = 0;
    for (const auto& v : variables_) {
      switch (v.kind) {
        case VariableKind::continuous: {
          const double t = std::clamp(u[k++], 0.0, 1.0);
          double x = v.lower + t * (v.upper - v.lower);
          p.values[v.name] = std::clamp(x, v.lower, v.upper);
          break;
        }
        case VariableKind::discrete: {
          const double t = std::clamp(u[k++], 0.0, 1.0);
          const double pos = t * static_cast<double>(v.levels.size() - 1);
          // nearest index, exact halves resolve to the lower index
          auto idx = static_cast<std::size_t>(std::ceil(pos - 0.5));
          idx = std::min(idx, v.levels.size() - 1);
          p.values[v.name] = v.levels[idx];
          break;
        }
        case VariableKind::categorical: {
          std::size_t best = 0;
          for (std::size_t i = 1; i < v.labels.size(); ++i) {
            if (u[k + i] > u[k + best]) best = i;
          }
          k += v.labels.size();
          p.values[v.name] = v.labels[best];
          break;
        }
      }
    }
    return p;
  }

  /// `n` independent uniform designs; identical for identical `seed`.
  std::vector<DesignPoint> sample_uniform(std::uint64_t seed, std::size_t n) const {
    if (n == 0) throw SpaceError("sample_uniform: n must be at least 1");
    Rng rng(seed, 0x5A4D);
    std::vector<DesignPoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      DesignPoint p;
      for (const auto& v : variables_) {
        switch (v.kind) {
          case VariableKind::continuous:
            p.values[v.name] = std::min(v.lower + rng.uniform() * (v.upper - v.lower), v.upper);
            break;
          case VariableKind::discrete:
            p.values[v.name] = v.levels[rng.below(v.levels.size())];
            break;
          case VariableKind::categorical:
            p.values[v.name] = v.labels[rng.below(v.labels.size())];
            break;
        }
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  /// Projects a design onto the space: clamps continuous values, snaps
  /// discrete values to the nearest level (lower level on ties).
  DesignPoint clip(const DesignPoint& p) const {
    for (const auto& [key, val] : p.values) {
      if (!index_of(key)) throw SpaceError("unknown variable '" + key + "'");
    }
    DesignPoint out;
    out.name = p.name;
    for (const auto& v : variables_) {
      auto it = p.values.find(v.name);
      if (it == p.values.end()) throw SpaceError("missing value for '" + v.name + "'");
      const Value& val = it->second;
      if (v.kind == VariableKind::categorical) {
        const auto* s = std::get_if<std::string>(&val);
        if (!s || !v.label_index(*s)) throw SpaceError("unknown level for '" + v.name + "'");
        out.values[v.name] = *s;
        continue;
      }
      const auto* d = std::get_if<double>(&val);
      if (!d || std::isnan(*d)) throw SpaceError("value of '" + v.name + "' must be a number");
      if (v.kind == VariableKind::continuous) {
        out.values[v.name] = std::clamp(*d, v.lower, v.upper);
      } else {
        std::size_t best = 0;
        for (std::size_t i = 1; i < v.levels.size(); ++i) {
          if (std::abs(v.levels[i] - *d) < std::abs(v.levels[best] - *d)) best = i;
        }
        out.values[v.name] = v.levels[best];
      }
    }
    return out;
  }

  bool has_continuous() const { return count(VariableKind::continuous) > 0; }

  Json to_json() const {
    Json arr = Json::array();
    for (const auto& v : variables_) {
      Json j;
      j["name"] = v.name;
      j["kind"] = to_string(v.kind);
      if (v.kind == VariableKind::continuous) {
        j["lower"] = v.lower;
        j["upper"] = v.upper;
      } else if (v.kind == VariableKind::discrete) {
        j["levels"] = v.levels;
      } else {
        j["levels"] = v.labels;
      }
      j["unit"] = v.unit;
      arr.push_back(std::move(j));
    }
    return arr;
  }

  static ParamSpace from_json(const Json& arr) {
    if (!arr.is_array()) throw SpaceError("space definition must be an array of variables");
    std::vector<VariableSpec> vars;
    for (const auto& j : arr) {
      VariableSpec v;
      v.name = j.at("name").get<std::string>();
      v.kind = parse_variable_kind(j.at("kind").get<std::string>());
      v.unit = j.value("unit", std::string{});
      if (v.kind == VariableKind::continuous) {
        v.lower = j.at("lower").get<double>();
        v.upper = j.at("upper").get<double>();
      } else if (v.kind == VariableKind::discrete) {
        v.levels = j.at("levels").get<std::vector<double>>();
      } else {
        v.labels = j.at("levels").get<std::vector<std::string>>();
      }
      vars.push_back(std::move(v));
    }
    return ParamSpace(std::move(vars));
  }

  /// Design-file JSON in space order, `name` last when set.
  Json design_to_json(const DesignPoint& p) const {
    Json j = Json::object();
    for (const auto& v : variables_) {
      auto it = p.values.find(v.name);
      if (it == p.values.end()) continue;
      std::visit([&](const auto& x) { j[v.name] = x; }, it->second);
    }
    if (!p.name.empty()) j["name"] = p.name;
    return j;
  }

 private:
  static void check_value(const VariableSpec& v, const Value& val) {
    if (v.kind == VariableKind::categorical) {
      const auto* s = std::get_if<std::string>(&val);
      if (!s) throw SpaceError("value of '" + v.name + "' must be a level label");
      if (!v.label_index(*s)) throw SpaceError("unknown level '" + *s + "' for '" + v.name + "'");
      return;
    }
    const auto* d = std::get_if<double>(&val);
    if (!d) throw SpaceError("value of '" + v.name + "' must be a number");
    if (!std::isfinite(*d)) throw SpaceError("value of '" + v.name + "' is not finite");
    if (v.kind == VariableKind::continuous) {
      if (*d < v.lower || *d > v.upper) throw SpaceError("value of '" + v.name + "' is out of bounds");
    } else if (!v.level_index(*d)) {
      throw SpaceError("value of '" + v.name + "' is not one of its levels");
    }
  }

  std::vector<VariableSpec> variables_;
  std::size_t relaxed_dim_ = 0;
};

}  // namespace shapebench
