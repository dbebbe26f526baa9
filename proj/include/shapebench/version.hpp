#pragma once

namespace shapebench {

inline constexpr const char* kHarnessVersion = "0.1.0";
inline constexpr const char* kBundleSchemaVersion = "0.1.0";

}  // namespace shapebench
