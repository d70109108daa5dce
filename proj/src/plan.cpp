#include "loadgen/plan.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "loadgen/errors.hpp"

namespace loadgen {

namespace {

using nlohmann::json;

RequestTemplate parse_request(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("path"))
    throw ConfigError("plan: request in " + where + " needs a \"path\"");
  RequestTemplate r;
  r.path = j.at("path").get<std::string>();
  if (j.contains("method")) r.method = j.at("method").get<std::string>();
  if (j.contains("body")) r.body = j.at("body").get<std::string>();
  if (j.contains("headers")) {
    for (const auto& [k, v] : j.at("headers").items())
      r.headers.emplace_back(k, v.get<std::string>());
  }
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (k != "path" && k != "method" && k != "body" && k != "headers")
      throw ConfigError("plan: unknown request key \"" + k + "\" in " + where);
  }
  return r;
}

}  // namespace

WorkloadPlan parse_plan(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("plan: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version"))
    throw ConfigError("plan: missing schema_version");
  int version = j.at("schema_version").get<int>();
  if (version != WorkloadPlan::kSchemaVersion)
    throw ConfigError("plan: unsupported schema_version " +
                      std::to_string(version));
  if (!j.contains("transactions") || !j.at("transactions").is_array() ||
      j.at("transactions").empty())
    throw ConfigError("plan: needs a non-empty \"transactions\" array");

  WorkloadPlan plan;
  plan.schema_version = version;
  std::set<std::string> seen;
  for (const auto& t : j.at("transactions")) {
    PlanTransaction pt;
    if (!t.contains("name"))
      throw ConfigError("plan: transaction without a name");
    pt.name = t.at("name").get<std::string>();
    if (!seen.insert(pt.name).second)
      throw ConfigError("plan: duplicate transaction \"" + pt.name + "\"");
    if (!t.contains("requests") || !t.at("requests").is_array() ||
        t.at("requests").empty())
      throw ConfigError("plan: transaction \"" + pt.name +
                        "\" needs a non-empty request chain");
    for (const auto& r : t.at("requests"))
      pt.requests.push_back(parse_request(r, pt.name));
    plan.transactions.push_back(std::move(pt));
  }
  return plan;
}

WorkloadPlan load_plan(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("plan: cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_plan(buf.str());
}

std::string plan_to_json(const WorkloadPlan& plan) {
  json j;
  j["schema_version"] = plan.schema_version;
  j["transactions"] = json::array();
  for (const auto& t : plan.transactions) {
    json jt;
    jt["name"] = t.name;
    jt["requests"] = json::array();
    for (const auto& r : t.requests) {
      json jr;
      jr["method"] = r.method;
      jr["path"] = r.path;
      if (!r.body.empty()) jr["body"] = r.body;
      if (!r.headers.empty()) {
        json jh = json::object();
        for (const auto& [k, v] : r.headers) jh[k] = v;
        jr["headers"] = jh;
      }
      jt["requests"].push_back(jr);
    }
    j["transactions"].push_back(jt);
  }
  return j.dump(2) + "\n";
}

WorkloadPlan default_plan() {
  auto get = [](std::string path) {
    RequestTemplate r;
    r.path = std::move(path);
    return r;
  };
  auto post = [](std::string path, std::string body) {
    RequestTemplate r;
    r.method = "POST";
    r.path = std::move(path);
    r.body = std::move(body);
    r.headers.emplace_back("Content-Type",
                           "application/x-www-form-urlencoded");
    return r;
  };

  WorkloadPlan plan;
  plan.transactions = {
      {"Home", {get("/")}},
      {"Sign up page", {get("/"), get("/my-account")}},
      {"Sign up",
       {get("/"), get("/my-account"),
        post("/my-account/register", "user=test&pass=test")}},
      {"Login page", {get("/"), get("/my-account")}},
      {"Login",
       {get("/"), get("/my-account"),
        post("/my-account/login", "user=test&pass=test")}},
      {"Search page", {get("/")}},
      {"Select product", {get("/"), get("/product/sample")}},
      {"Add to cart",
       {get("/product/sample"), post("/cart/add", "product=sample&qty=1")}},
      {"Payment",
       {get("/product/sample"), post("/cart/add", "product=sample&qty=1"),
        get("/checkout")}},
      {"Confirm",
       {get("/product/sample"), post("/cart/add", "product=sample&qty=1"),
        get("/checkout"), get("/checkout/paypal")}},
      {"Log out", {get("/my-account"), get("/my-account/logout")}},
  };
  return plan;
}

Catalog catalog_from_plan(const WorkloadPlan& plan) {
  Catalog catalog;
  catalog.reserve(plan.transactions.size());
  for (std::size_t j = 0; j < plan.transactions.size(); ++j) {
    Transaction t;
    t.id = static_cast<int>(j);
    t.name = plan.transactions[j].name;
    for (const auto& r : plan.transactions[j].requests)
      t.chain.push_back(r.method + " " + r.path);
    catalog.push_back(std::move(t));
  }
  return catalog;
}

}  // namespace loadgen
