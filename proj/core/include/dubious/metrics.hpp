#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dubious/legibility.hpp"
#include "dubious/observers.hpp"
#include "dubious/scenario.hpp"

namespace dubious
{

/// Scores restricted to what one observer saw. Absent entries are not defined for the scenario
/// (no decoy goal, or fewer than two goals).
struct ObserverScores
{
  double legibility = 0.0;
  std::optional<double> illeg_decoy;
  std::optional<double> illeg_ambiguous;
};

/// One table row. Empty optionals render as "---": `earliest_correct_pct` is empty when the
/// observer never guesses correctly, score fields when they do not apply to the observer's sign.
struct ObserverMetrics
{
  std::string observer_id;
  double motive = 0.0;
  std::optional<double> earliest_correct_pct;
  std::optional<double> pct_correct_after_first;
  std::optional<double> legibility;
  std::optional<double> illeg_decoy;
  std::optional<double> illeg_ambiguous;
};

struct MetricsReport
{
  std::string label;
  std::vector<ObserverMetrics> observers;
};

struct LabeledTrajectory
{
  std::string label;
  Trajectory trajectory;
};

/// First timestep with a confident correct guess, as 100 * t / T.
std::optional<double> earliest_correct(const BeliefTrace& belief, const GoalSet& goals,
                                       const GoalId& true_goal, double margin);

/// Share of timesteps from the first correct guess through T that are confident and correct.
std::optional<double> pct_correct_after_first(const BeliefTrace& belief, const GoalSet& goals,
                                              const GoalId& true_goal, double margin);

ObserverScores observer_scores(const Trajectory& traj, const Observer& obs,
                               const Scenario& scenario);

ObserverMetrics observer_metrics(const Trajectory& traj, const Observer& obs,
                                 const Scenario& scenario);

/// Throws InvalidArgument when a trajectory's length or endpoints do not match the scenario.
std::vector<MetricsReport> build_report(const Scenario& scenario,
                                        const std::vector<LabeledTrajectory>& trajectories);

}  // namespace dubious
