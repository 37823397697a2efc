#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dubious/geometry.hpp"
#include "dubious/legibility.hpp"
#include "dubious/objective.hpp"
#include "dubious/observers.hpp"
#include "dubious/stomp.hpp"

namespace dubious
{

inline constexpr int kScenarioSchemaVersion = 1;

/// Everything needed to plan and evaluate one environment.
struct Scenario
{
  std::string name;
  std::string description;
  Bounds bounds;
  Point2 start;
  GoalSet goals;
  GoalId true_goal;
  std::vector<Observer> observers;
  int trajectory_steps = 40;
  /// Holds alpha_neg, the decoy goal and inference settings.
  ObjectiveConfig objective;
  StompConfig stomp;

  /// Throws InvalidArgument describing the first violated invariant.
  void validate() const;

  Point2 true_goal_position() const;
  Objective make_objective() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// The goal other than `true_goal` farthest from it (first in order on ties); empty for one goal.
std::optional<GoalId> farthest_goal(const GoalSet& goals, const GoalId& true_goal);

}  // namespace dubious
