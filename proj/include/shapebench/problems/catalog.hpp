#pragma once

// The task catalog: a versioned JSON document listing every environment.
// The built-in copy is compiled in; SHAPEBENCH_CATALOG points at a file that
// replaces it.

#include <cstdlib>
#include <string>
#include <vector>

#include "shapebench/json.hpp"
#include "shapebench/problems/catalog_data.hpp"
#include "shapebench/problems/environment.hpp"

namespace shapebench {

inline constexpr const char* kCatalogEnvVar = "SHAPEBENCH_CATALOG";

class Catalog {
 public:
  explicit Catalog(Json doc) : doc_(std::move(doc)) {
    if (!doc_.is_object() || !doc_.contains("tasks") || !doc_.at("tasks").is_array()) {
      throw ConfigError("catalog must be an object with a 'tasks' array");
    }
    version_ = doc_.value("catalog_version", std::string("unversioned"));
    std::vector<std::string> seen;
    for (const auto& t : doc_.at("tasks")) {
      const auto id = t.at("id").get<std::string>();
      for (const auto& s : seen) {
        if (s == id) throw ConfigError("duplicate task id '" + id + "' in catalog");
      }
      seen.push_back(id);
    }
  }

  static Catalog builtin() { return Catalog(Json::parse(detail::kEmbeddedCatalog)); }

  static Catalog from_file(const std::string& path) {
    Json doc;
    try {
      doc = read_json_file(path);
    } catch (const std::runtime_error& e) {
      throw ConfigError(std::string("catalog: ") + e.what());
    }
    return Catalog(std::move(doc));
  }

  /// The file named by SHAPEBENCH_CATALOG if set, else the built-in catalog.
  static Catalog load() {
    const char* p = std::getenv(kCatalogEnvVar);
    if (p != nullptr && *p != '\0') return from_file(p);
    return builtin();
  }

  const std::string& version() const { return version_; }
  const Json& document() const { return doc_; }
  std::size_t size() const { return doc_.at("tasks").size(); }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (const auto& t : doc_.at("tasks")) out.push_back(t.at("id").get<std::string>());
    return out;
  }

  bool contains(const std::string& id) const { return find(id) != nullptr; }

  const Json& entry(const std::string& id) const {
    const Json* e = find(id);
    if (e == nullptr) throw ConfigError("unknown task '" + id + "'");
    return *e;
  }

  ProblemEnvironment make(const std::string& id, std::unique_ptr<Evaluator> evaluator = nullptr) const {
    return ProblemEnvironment::from_json(entry(id), std::move(evaluator));
  }

 private:
  const Json* find(const std::string& id) const {
    for (const auto& t : doc_.at("tasks")) {
      if (t.at("id") == id) return &t;
    }
    return nullptr;
  }

  Json doc_;
  std::string version_;
};

/// Source text of catalog_data.hpp for a catalog document.
inline std::string catalog_header_text(const std::string& json_text) {
  if (json_text.find(")SBCAT\"") != std::string::npos) throw ConfigError("catalog text contains the raw-string delimiter");
  return "#pragma once\n\n"
         "// Generated from catalog/shapebench_catalog.json; the catalog test keeps the\n"
         "// two in sync. Regenerate with `shapebench catalog export --header`.\n\n"
         "namespace shapebench::detail {\n\n"
         "inline constexpr const char kEmbeddedCatalog[] = R\"SBCAT(" +
         json_text + ")SBCAT\";\n\n}  // namespace shapebench::detail\n";
}

}  // namespace shapebench
