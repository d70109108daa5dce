#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "loadgen/workload.hpp"

namespace loadgen {

struct RequestTemplate {
  std::string method = "GET";
  std::string path;
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;
};

struct PlanTransaction {
  std::string name;
  std::vector<RequestTemplate> requests;
};

/// A workload plan: the transactions an HTTP run can exercise, each with the
/// ordered request chain one virtual user plays back. Loaded once at startup.
struct WorkloadPlan {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  std::vector<PlanTransaction> transactions;
};

/// Parses a plan JSON file. Rejects missing/unsupported schema_version,
/// empty chains, and duplicate transaction names.
WorkloadPlan load_plan(const std::filesystem::path& file);

WorkloadPlan parse_plan(const std::string& json_text);

std::string plan_to_json(const WorkloadPlan& plan);

/// Built-in plan for the default catalog, targeting an online-shop URL
/// layout. Chain lengths match default_catalog().
WorkloadPlan default_plan();

/// Derives the catalog view (names, chains, costs) of a plan.
Catalog catalog_from_plan(const WorkloadPlan& plan);

}  // namespace loadgen
