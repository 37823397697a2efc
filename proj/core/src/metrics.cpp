#include "dubious/metrics.hpp"

#include "dubious/error.hpp"
#include "dubious/objective.hpp"

namespace dubious
{

namespace
{

std::optional<std::size_t> first_correct_step(const BeliefTrace& belief, const GoalSet& goals,
                                              const GoalId& true_goal, double margin)
{
  for (std::size_t t = 0; t < belief.size(); ++t)
  {
    if (confident_guess(belief.posteriors[t], goals, margin) == true_goal)
      return t;
  }
  return std::nullopt;
}

}  // namespace

std::optional<double> earliest_correct(const BeliefTrace& belief, const GoalSet& goals,
                                       const GoalId& true_goal, double margin)
{
  if (belief.size() < 2)
    throw InvalidArgument("belief trace must span at least two waypoints");
  const auto first = first_correct_step(belief, goals, true_goal, margin);
  if (!first)
    return std::nullopt;
  const double total_steps = static_cast<double>(belief.size() - 1);
  return 100.0 * static_cast<double>(*first) / total_steps;
}

std::optional<double> pct_correct_after_first(const BeliefTrace& belief, const GoalSet& goals,
                                              const GoalId& true_goal, double margin)
{
  const auto first = first_correct_step(belief, goals, true_goal, margin);
  if (!first)
    return std::nullopt;
  std::size_t correct = 0;
  for (std::size_t t = *first; t < belief.size(); ++t)
  {
    if (confident_guess(belief.posteriors[t], goals, margin) == true_goal)
      ++correct;
  }
  return 100.0 * static_cast<double>(correct) / static_cast<double>(belief.size() - *first);
}

ObserverScores observer_scores(const Trajectory& traj, const Observer& obs,
                               const Scenario& scenario)
{
  const auto& goals = scenario.goals;
  const auto& inference = scenario.objective.inference;
  const auto true_index = goals.index_of(scenario.true_goal);
  std::optional<std::size_t> decoy_index;
  if (scenario.objective.decoy_goal)
    decoy_index = goals.index_of(*scenario.objective.decoy_goal);

  ObserverScores scores;
  const auto view = observe(traj, obs, goals, inference);
  if (view.sample_posteriors.empty())
  {
    scores.legibility = 0.0;
    if (decoy_index)
      scores.illeg_decoy = 0.0;
    if (goals.size() >= 2)
      scores.illeg_ambiguous = ambiguity_value(GoalPosterior{goals.prior()}, true_index,
                                               inference.ambiguous_table_scaling);
    return scores;
  }

  scores.legibility = weighted_goal_probability(view.sample_posteriors, true_index);
  if (decoy_index)
    scores.illeg_decoy = weighted_goal_probability(view.sample_posteriors, *decoy_index);
  if (goals.size() >= 2)
    scores.illeg_ambiguous =
        weighted_ambiguity(view.sample_posteriors, true_index, inference.ambiguous_table_scaling);
  return scores;
}

ObserverMetrics observer_metrics(const Trajectory& traj, const Observer& obs,
                                 const Scenario& scenario)
{
  const auto& inference = scenario.objective.inference;
  const auto belief = belief_trace(traj, obs, scenario.goals, inference);
  const auto scores = observer_scores(traj, obs, scenario);

  ObserverMetrics row;
  row.observer_id = obs.id;
  row.motive = obs.motive;
  row.earliest_correct_pct =
      earliest_correct(belief, scenario.goals, scenario.true_goal, inference.margin);
  row.pct_correct_after_first =
      pct_correct_after_first(belief, scenario.goals, scenario.true_goal, inference.margin);
  if (obs.is_positive())
  {
    row.legibility = scores.legibility;
  }
  else
  {
    row.illeg_decoy = scores.illeg_decoy;
    row.illeg_ambiguous = scores.illeg_ambiguous;
  }
  return row;
}

std::vector<MetricsReport> build_report(const Scenario& scenario,
                                        const std::vector<LabeledTrajectory>& trajectories)
{
  std::vector<MetricsReport> reports;
  reports.reserve(trajectories.size());
  const Point2 goal = scenario.true_goal_position();
  for (const auto& labeled : trajectories)
  {
    const auto& traj = labeled.trajectory;
    if (traj.steps() != scenario.trajectory_steps)
      throw InvalidArgument("trajectory '" + labeled.label + "' has " +
                            std::to_string(traj.steps()) + " steps, scenario expects " +
                            std::to_string(scenario.trajectory_steps));
    if (traj.front() != scenario.start || traj.back() != goal)
      throw InvalidArgument("trajectory '" + labeled.label +
                            "' does not run from the scenario start to the true goal");
    MetricsReport report{labeled.label, {}};
    for (const auto& obs : scenario.observers)
      report.observers.push_back(observer_metrics(traj, obs, scenario));
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace dubious
