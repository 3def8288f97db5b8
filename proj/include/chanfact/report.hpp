// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace chanfact {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct CheckResult {
  std::string id;
  std::string description;
  double residual_or_value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ReportDocument {
  std::string suite;
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  std::int64_t elapsed_ms = 0;

  bool all_pass() const;
};

nlohmann::json report_to_json(const ReportDocument& doc);

// Strict parse: the schema version must match and unknown fields are
// rejected at every level.
ReportDocument report_from_json(const nlohmann::json& j);

}  // namespace chanfact
