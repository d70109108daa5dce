#pragma once

#include <cstdint>
#include <string>

#include "loadgen/workload.hpp"

namespace loadgen {

/// What any environment reports back after a workload is applied.
struct Observation {
  double avg_response_time_ms = 0.0;
  double avg_error_rate = 0.0;

  bool operator==(const Observation&) const = default;
};

struct Thresholds {
  double rt_ms = 1500.0;
  double er = 0.2;
};

/// True when either metric has reached its threshold (boundary included).
bool is_terminal(const Observation& obs, const Thresholds& th);

/// Which threshold(s) a terminal observation crossed: "rt", "er", or "both".
std::string violation_kind(const Observation& obs, const Thresholds& th);

/// Identifies one environment application, so seeded jitter can be replayed.
struct StepKey {
  int episode = 0;
  int step = 0;
};

class Environment {
 public:
  virtual ~Environment() = default;

  /// Applies the workload and reports the aggregate observation. Exactly one
  /// apply is in flight at a time.
  virtual Observation apply(const WorkloadVector& w, StepKey key) = 0;

  virtual const Catalog& catalog() const = 0;
};

/// Queueing-shaped stand-in for a live server: response time inflates as
/// load approaches capacity, errors ramp linearly past a knee.
struct SimParams {
  double base_rt_ms = 50.0;
  double capacity = 125.0;     // request-units at which the server saturates
  double err_knee = 80.0;      // request-units where errors start
  double err_scale = 200.0;    // request-units from knee to 100% errors
  double rt_cap_ms = 5000.0;
  double jitter_sigma = 0.05;  // 0 disables jitter
  std::uint64_t seed = 0;
};

/// Pure function of (params, workload, key). With jitter_sigma > 0 both
/// metrics are scaled by factors in [1-sigma, 1+sigma] drawn from a
/// counter-based generator keyed by (seed, episode, step), so replays are
/// bit-identical.
Observation sim_apply(const SimParams& p, const WorkloadVector& w,
                      const Catalog& catalog, StepKey key);

class SimEnvironment final : public Environment {
 public:
  SimEnvironment(SimParams params, Catalog catalog)
      : params_(params), catalog_(std::move(catalog)) {}

  Observation apply(const WorkloadVector& w, StepKey key) override {
    return sim_apply(params_, w, catalog_, key);
  }

  const Catalog& catalog() const override { return catalog_; }
  const SimParams& params() const { return params_; }

 private:
  SimParams params_;
  Catalog catalog_;
};

}  // namespace loadgen
