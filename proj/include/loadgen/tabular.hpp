#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "loadgen/env.hpp"
#include "loadgen/rng.hpp"

namespace loadgen {

inline constexpr int kDiscreteStates = 6;

/// One of six non-terminal bins over the (error rate, response time) plane,
/// or the absorbing terminal state. The error-rate range below its threshold
/// splits into two equal bins, the response-time range into three.
struct DiscreteState {
  bool terminal = false;
  int er_bin = 0;  // 0..1
  int rt_bin = 0;  // 0..2

  int index() const { return er_bin * 3 + rt_bin; }
  std::string str() const;

  static DiscreteState Terminal() { return DiscreteState{true, 0, 0}; }
  bool operator==(const DiscreteState&) const = default;
};

/// Squared-ratio reward: grows as either metric approaches its threshold and
/// equals exactly 2 when both sit on the boundary.
double reward(const Observation& obs, const Thresholds& th);

DiscreteState discretize(const Observation& obs, const Thresholds& th);

struct LearningParams {
  double alpha = 0.5;
  double gamma = 0.5;
  double eps_start = 1.0;
  double eps_min = 0.1;
  long eps_decay_steps = 400;
};

/// Linear anneal from eps_start to eps_min over eps_decay_steps global
/// steps, constant afterwards.
double epsilon_at(long step, const LearningParams& p);

/// Action values for the six observable states. The terminal state's row is
/// identically zero and is never stored or written.
class QTable {
 public:
  explicit QTable(int actions);

  int actions() const { return actions_; }

  double at(DiscreteState s, int action) const;
  void set(DiscreteState s, int action, double value);

  /// Values of every action in s; all zeros for the terminal state.
  std::vector<double> row(DiscreteState s) const;

  double max_value(DiscreteState s) const;

  /// One Bellman step on entry (s, a). s must not be terminal.
  void update(DiscreteState s, int action, double r, DiscreteState next,
              const LearningParams& p);

  bool operator==(const QTable&) const = default;

 private:
  int actions_;
  std::vector<double> values_;  // kDiscreteStates x actions_, row-major
};

/// Pure-function form of QTable::update.
QTable q_update(QTable q, DiscreteState s, int action, double r,
                DiscreteState next, const LearningParams& p);

/// Epsilon-greedy selection over one state's action values: uniform random
/// with probability epsilon, otherwise argmax with lowest-index tie-break.
int select_action(std::span<const double> q_values, double epsilon, Rng& rng);

/// Versioned human-readable snapshot; written atomically, carries the global
/// step so a run can resume where it stopped.
void save_qtable(const std::filesystem::path& file, const QTable& q,
                 long global_step);
std::pair<QTable, long> load_qtable(const std::filesystem::path& file);

}  // namespace loadgen
