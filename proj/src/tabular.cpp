#include "loadgen/tabular.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "loadgen/errors.hpp"
#include "loadgen/textio.hpp"

namespace loadgen {

std::string DiscreteState::str() const {
  if (terminal) return "terminal";
  return "s" + std::to_string(index());
}

double reward(const Observation& obs, const Thresholds& th) {
  double rt = obs.avg_response_time_ms / th.rt_ms;
  double er = obs.avg_error_rate / th.er;
  return rt * rt + er * er;
}

DiscreteState discretize(const Observation& obs, const Thresholds& th) {
  if (is_terminal(obs, th)) return DiscreteState::Terminal();
  int er_bin = std::clamp(
      static_cast<int>(std::floor(2.0 * obs.avg_error_rate / th.er)), 0, 1);
  int rt_bin = std::clamp(
      static_cast<int>(std::floor(3.0 * obs.avg_response_time_ms / th.rt_ms)),
      0, 2);
  return DiscreteState{false, er_bin, rt_bin};
}

double epsilon_at(long step, const LearningParams& p) {
  if (step >= p.eps_decay_steps || p.eps_decay_steps <= 0) return p.eps_min;
  double frac = static_cast<double>(step) / p.eps_decay_steps;
  return p.eps_start + frac * (p.eps_min - p.eps_start);
}

QTable::QTable(int actions)
    : actions_(actions), values_(kDiscreteStates * actions, 0.0) {
  if (actions <= 0) throw std::invalid_argument("QTable needs actions >= 1");
}

double QTable::at(DiscreteState s, int action) const {
  if (s.terminal) return 0.0;
  return values_[s.index() * actions_ + action];
}

void QTable::set(DiscreteState s, int action, double value) {
  assert(!s.terminal);
  values_[s.index() * actions_ + action] = value;
}

std::vector<double> QTable::row(DiscreteState s) const {
  if (s.terminal) return std::vector<double>(actions_, 0.0);
  auto begin = values_.begin() + s.index() * actions_;
  return std::vector<double>(begin, begin + actions_);
}

double QTable::max_value(DiscreteState s) const {
  if (s.terminal) return 0.0;
  auto begin = values_.begin() + s.index() * actions_;
  return *std::max_element(begin, begin + actions_);
}

void QTable::update(DiscreteState s, int action, double r, DiscreteState next,
                    const LearningParams& p) {
  if (s.terminal)
    throw std::invalid_argument("cannot update the terminal state");
  double current = at(s, action);
  double target = r + p.gamma * max_value(next);
  set(s, action, current + p.alpha * (target - current));
}

QTable q_update(QTable q, DiscreteState s, int action, double r,
                DiscreteState next, const LearningParams& p) {
  q.update(s, action, r, next, p);
  return q;
}

int select_action(std::span<const double> q_values, double epsilon, Rng& rng) {
  if (q_values.empty()) throw std::invalid_argument("no actions to select");
  int n = static_cast<int>(q_values.size());
  if (rng.uniform01() < epsilon) return rng.uniform_below(n);
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (q_values[i] > q_values[best]) best = i;
  return best;
}

void save_qtable(const std::filesystem::path& file, const QTable& q,
                 long global_step) {
  std::ostringstream out;
  out << "qtable v1\n";
  out << "actions " << q.actions() << "\n";
  out << "global_step " << global_step << "\n";
  for (int s = 0; s < kDiscreteStates; ++s) {
    DiscreteState st{false, s / 3, s % 3};
    for (int a = 0; a < q.actions(); ++a) {
      if (a) out << ' ';
      out << format_double(q.at(st, a));
    }
    out << '\n';
  }
  atomic_write(file, out.str());
}

std::pair<QTable, long> load_qtable(const std::filesystem::path& file) {
  std::istringstream in(read_file(file));
  std::string magic, version, key;
  in >> magic >> version;
  if (magic != "qtable" || version != "v1")
    throw ConfigError(file.string() + ": not a v1 qtable snapshot");
  int actions = 0;
  long step = 0;
  in >> key >> actions;
  if (key != "actions" || actions <= 0)
    throw ConfigError(file.string() + ": bad actions header");
  in >> key >> step;
  if (key != "global_step")
    throw ConfigError(file.string() + ": bad global_step header");
  QTable q(actions);
  for (int s = 0; s < kDiscreteStates; ++s) {
    DiscreteState st{false, s / 3, s % 3};
    for (int a = 0; a < actions; ++a) {
      std::string token;
      if (!(in >> token))
        throw ConfigError(file.string() + ": truncated value block");
      q.set(st, a, parse_double(token));
    }
  }
  return {q, step};
}

}  // namespace loadgen
