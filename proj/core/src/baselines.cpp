#include "dubious/baselines.hpp"

#include "dubious/error.hpp"

namespace dubious
{

Trajectory efficient_trajectory(Point2 start, Point2 goal, int steps)
{
  if (steps < 1)
    throw InvalidArgument("efficient_trajectory needs at least one step");
  std::vector<Point2> points(static_cast<std::size_t>(steps) + 1);
  const Point2 delta = goal - start;
  for (int t = 0; t <= steps; ++t)
    points[t] = start + (static_cast<double>(t) / steps) * delta;
  points.back() = goal;
  return Trajectory(std::move(points));
}

Scenario full_view_scenario(const Scenario& scenario, double motive, int alpha_neg)
{
  Scenario derived = scenario;
  derived.observers.clear();
  derived.observers.emplace_back("full-view", motive, ConvexPolygon::from_bounds(scenario.bounds));
  derived.objective.alpha_neg = alpha_neg;
  if (motive < 0.0 && !derived.objective.decoy_goal)
    derived.objective.decoy_goal = farthest_goal(scenario.goals, scenario.true_goal);
  return derived;
}

Trajectory max_legible_baseline(const Scenario& scenario, const StompConfig& cfg)
{
  return optimize(full_view_scenario(scenario, 1.0, scenario.objective.alpha_neg), cfg)
      .best_trajectory;
}

Trajectory max_decoy_baseline(const Scenario& scenario, const StompConfig& cfg)
{
  const auto derived = full_view_scenario(scenario, -1.0, 1);
  if (!derived.objective.decoy_goal)
    throw InvalidArgument("max_decoy_baseline needs a decoy goal");
  return optimize(derived, cfg).best_trajectory;
}

}  // namespace dubious
