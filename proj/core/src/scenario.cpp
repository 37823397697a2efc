#include "dubious/scenario.hpp"

#include "dubious/error.hpp"

namespace dubious
{

void Scenario::validate() const
{
  bounds.validate();
  if (!point_in_bounds(start, bounds))
    throw InvalidArgument("start lies outside bounds");
  for (const auto& g : goals.goals())
  {
    if (!point_in_bounds(g.position, bounds))
      throw InvalidArgument("goal '" + g.id + "' lies outside bounds");
  }
  if (!goals.contains(true_goal))
    throw InvalidArgument("true_goal not in goals");
  if (objective.decoy_goal)
  {
    if (*objective.decoy_goal == true_goal)
      throw InvalidArgument("decoy_goal equals true_goal");
    if (!goals.contains(*objective.decoy_goal))
      throw InvalidArgument("decoy_goal not in goals");
  }
  if (trajectory_steps < 2)
    throw InvalidArgument("trajectory_steps must be at least 2");
  for (const auto& o : observers)
  {
    if (!intersects(o.region, bounds))
      throw InvalidArgument("observer '" + o.id + "' region does not intersect bounds");
  }
  objective.inference.validate();
  if (objective.alpha_neg != 1 && objective.alpha_neg != -1)
    throw InvalidArgument("alpha_neg must be -1 or +1");
  stomp.validate();
}

Point2 Scenario::true_goal_position() const { return goals[goals.index_of(true_goal)].position; }

Objective Scenario::make_objective() const
{
  return Objective(observers, goals, true_goal, objective);
}

std::optional<GoalId> farthest_goal(const GoalSet& goals, const GoalId& true_goal)
{
  const Point2 target = goals[goals.index_of(true_goal)].position;
  std::optional<GoalId> best;
  double best_distance = -1.0;
  for (const auto& g : goals.goals())
  {
    if (g.id == true_goal)
      continue;
    const double d = squared_norm(g.position - target);
    if (d > best_distance)
    {
      best_distance = d;
      best = g.id;
    }
  }
  return best;
}

}  // namespace dubious
