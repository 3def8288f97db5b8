// Copyright (c) the chanfact authors.
// SPDX-License-Identifier: Apache-2.0

#include "chanfact/report.hpp"

#include <stdexcept>

namespace chanfact {

using nlohmann::json;

bool ReportDocument::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

json report_to_json(const ReportDocument& doc) {
  json checks = json::array();
  for (const CheckResult& c : doc.checks)
    checks.push_back(json{{"id", c.id},
                          {"description", c.description},
                          {"residual_or_value", c.residual_or_value},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
  return json{{"schema_version", kReportSchemaVersion},
              {"suite", doc.suite},
              {"checks", std::move(checks)},
              {"seed", doc.seed},
              {"tool_version", doc.tool_version},
              {"elapsed_ms", doc.elapsed_ms}};
}

namespace {

void require_keys(const json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": not an object");
  for (const char* k : keys)
    if (!j.contains(k)) throw std::invalid_argument(std::string(what) + ": missing field '" + k + "'");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw std::invalid_argument(std::string(what) + ": unknown field '" + key + "'");
  }
}

}  // namespace

ReportDocument report_from_json(const json& j) {
  require_keys(j, {"schema_version", "suite", "checks", "seed", "tool_version", "elapsed_ms"},
               "report");
  if (j.at("schema_version").get<int>() != kReportSchemaVersion)
    throw std::invalid_argument("report: unsupported schema version");
  ReportDocument doc;
  doc.suite = j.at("suite").get<std::string>();
  doc.seed = j.at("seed").get<std::uint64_t>();
  doc.tool_version = j.at("tool_version").get<std::string>();
  doc.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  for (const json& c : j.at("checks")) {
    require_keys(c, {"id", "description", "residual_or_value", "tolerance", "pass"}, "check");
    doc.checks.push_back(CheckResult{c.at("id").get<std::string>(),
                                     c.at("description").get<std::string>(),
                                     c.at("residual_or_value").get<double>(),
                                     c.at("tolerance").get<double>(),
                                     c.at("pass").get<bool>()});
  }
  return doc;
}

}  // namespace chanfact
