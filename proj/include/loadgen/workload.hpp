#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loadgen {

/// One user operation, realized as an ordered chain of requests that a single
/// virtual user executes sequentially. The chain includes the operation's
/// prerequisites; its length is the transaction's cost in request-units.
struct Transaction {
  int id = 0;
  std::string name;
  std::vector<std::string> chain;

  int cost() const { return static_cast<int>(chain.size()); }
};

using Catalog = std::vector<Transaction>;

/// Per-transaction virtual-user counts. The total across transactions is the
/// workload size used as the efficiency metric everywhere downstream.
struct WorkloadVector {
  std::vector<long long> threads;

  long long total_size() const;
  bool operator==(const WorkloadVector&) const = default;
};

/// Index of the transaction whose workload an action increments.
struct ActionId {
  int k = 0;
};

/// Exact rational growth ratio. Kept in integer form so the ceiling rule in
/// apply_action never depends on floating-point rounding.
struct Ratio {
  long long num = 1;
  long long den = 3;

  double value() const { return static_cast<double>(num) / den; }
  std::string str() const;

  /// Accepts "1/3", "2", or a decimal like "0.25".
  static Ratio parse(const std::string& text);
};

/// The eleven stock transactions of an online-shop workload, with chains
/// matching the prerequisite structure of each operation.
Catalog default_catalog();

/// All components set to `threads`, one per catalog entry.
WorkloadVector uniform_workload(long long threads, std::size_t transactions);

/// Grows component a.k to ceil(w[k] * (1 + ratio)); other components are
/// untouched. Ceiling guarantees strict growth for any positive component.
WorkloadVector apply_action(const WorkloadVector& w, ActionId a, Ratio ratio);

/// Applies the same ceiling growth rule to every component.
WorkloadVector apply_to_all(const WorkloadVector& w, Ratio ratio);

/// Total request-units: sum of threads[j] * cost_j.
long long load_units(const WorkloadVector& w, const Catalog& catalog);

}  // namespace loadgen
