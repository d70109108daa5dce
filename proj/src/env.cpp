#include "loadgen/env.hpp"

#include <algorithm>

#include "loadgen/rng.hpp"

namespace loadgen {

bool is_terminal(const Observation& obs, const Thresholds& th) {
  return obs.avg_response_time_ms >= th.rt_ms || obs.avg_error_rate >= th.er;
}

std::string violation_kind(const Observation& obs, const Thresholds& th) {
  bool rt = obs.avg_response_time_ms >= th.rt_ms;
  bool er = obs.avg_error_rate >= th.er;
  if (rt && er) return "both";
  if (rt) return "rt";
  if (er) return "er";
  return "";
}

namespace {

double jitter_factor(const SimParams& p, StepKey key, std::uint64_t dim) {
  std::uint64_t bits =
      counter_hash(p.seed, static_cast<std::uint64_t>(key.episode),
                   static_cast<std::uint64_t>(key.step), dim);
  return 1.0 - p.jitter_sigma + 2.0 * p.jitter_sigma * unit_double(bits);
}

}  // namespace

Observation sim_apply(const SimParams& p, const WorkloadVector& w,
                      const Catalog& catalog, StepKey key) {
  double load = static_cast<double>(load_units(w, catalog));
  double utilization = load / p.capacity;

  double rt = p.rt_cap_ms;
  if (utilization < 1.0)
    rt = std::min(p.rt_cap_ms, p.base_rt_ms / std::max(1e-6, 1.0 - utilization));

  double er = std::clamp((load - p.err_knee) / p.err_scale, 0.0, 1.0);

  if (p.jitter_sigma > 0.0) {
    rt = std::min(p.rt_cap_ms, rt * jitter_factor(p, key, 0));
    er = std::clamp(er * jitter_factor(p, key, 1), 0.0, 1.0);
  }
  return Observation{rt, er};
}

}  // namespace loadgen
