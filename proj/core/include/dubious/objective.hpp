#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dubious/legibility.hpp"
#include "dubious/observers.hpp"

namespace dubious
{

struct ObjectiveConfig
{
  /// +1 drives negative observers toward the decoy goal, -1 makes their regions costly.
  int alpha_neg = 1;
  /// Required whenever a negative observer is present.
  std::optional<GoalId> decoy_goal;
  InferenceConfig inference;

  friend bool operator==(const ObjectiveConfig&, const ObjectiveConfig&) = default;
};

/// One cost per waypoint, length T + 1.
using CostVector = std::vector<double>;

/// Visible-time weighted score of one observer restricted to its view of a trajectory.
struct ObserverView
{
  /// Whether waypoint t lies in the region.
  std::vector<bool> visible;
  /// Posterior after each visible sample, in sample order.
  std::vector<GoalPosterior> sample_posteriors;
  /// Timestep of each visible sample.
  std::vector<int> sample_steps;
  /// Weight (n - 1 - rank) of each visible sample; all ones if only one sample was seen.
  std::vector<double> weights;
  double weight_total = 0.0;
};

ObserverView observe(const Trajectory& traj, const Observer& obs, const GoalSet& goals,
                     const InferenceConfig& cfg);

/// Per-timestep mixed-motive cost for the stochastic optimizer.
class Objective
{
public:
  /// Throws InvalidArgument on an unknown true goal, a bad alpha_neg, or a missing/invalid decoy
  /// when negative observers are present.
  Objective(std::vector<Observer> observers, GoalSet goals, GoalId true_goal, ObjectiveConfig cfg);

  /// Motive-weighted visible legibility over positive observers that see waypoint i.
  double f_pos(std::size_t i, const Trajectory& traj) const;
  /// alpha_neg * |motive| weighted visible decoy legibility over negative observers that see i.
  double f_neg(std::size_t i, const Trajectory& traj) const;
  /// -(f_pos + f_neg) normalized by the summed |motive| of observers seeing i; 0 when unseen.
  double per_timestep_cost(std::size_t i, const Trajectory& traj) const;

  CostVector cost_vector(const Trajectory& traj) const;
  double total_cost(const Trajectory& traj) const;

  const std::vector<Observer>& observers() const { return observers_; }
  const GoalSet& goals() const { return goals_; }
  const GoalId& true_goal() const { return true_goal_; }
  const ObjectiveConfig& config() const { return cfg_; }

private:
  struct Terms
  {
    std::vector<double> pos;
    std::vector<double> neg;
    std::vector<double> seen_motive;
  };
  Terms evaluate(const Trajectory& traj) const;

  std::vector<Observer> observers_;
  GoalSet goals_;
  GoalId true_goal_;
  ObjectiveConfig cfg_;
  std::size_t true_index_;
  std::optional<std::size_t> decoy_index_;
};

}  // namespace dubious
