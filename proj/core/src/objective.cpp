#include "dubious/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dubious/error.hpp"

namespace dubious
{

ObserverView observe(const Trajectory& traj, const Observer& obs, const GoalSet& goals,
                     const InferenceConfig& cfg)
{
  ObserverView view;
  view.visible.resize(traj.size());
  const auto trace = visible_trace(traj, obs, traj.steps());
  for (const auto& s : trace.samples)
  {
    view.visible[s.step] = true;
    view.sample_steps.push_back(s.step);
  }
  view.sample_posteriors = visible_posteriors(trace, goals, traj.steps(), cfg);

  const auto n = trace.size();
  view.weights.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    view.weights[k] = n > 1 ? static_cast<double>(n - 1 - k) : 1.0;
  view.weight_total = std::accumulate(view.weights.begin(), view.weights.end(), 0.0);
  return view;
}

Objective::Objective(std::vector<Observer> observers, GoalSet goals, GoalId true_goal,
                     ObjectiveConfig cfg)
    : observers_(std::move(observers)),
      goals_(std::move(goals)),
      true_goal_(std::move(true_goal)),
      cfg_(std::move(cfg)),
      true_index_(goals_.index_of(true_goal_))
{
  cfg_.inference.validate();
  if (cfg_.alpha_neg != 1 && cfg_.alpha_neg != -1)
    throw InvalidArgument("alpha_neg must be -1 or +1");
  if (cfg_.decoy_goal)
  {
    if (*cfg_.decoy_goal == true_goal_)
      throw InvalidArgument("decoy equals true goal");
    decoy_index_ = goals_.index_of(*cfg_.decoy_goal);
  }
  const bool has_negative = std::any_of(observers_.begin(), observers_.end(),
                                        [](const Observer& o) { return o.motive < 0.0; });
  if (has_negative && !decoy_index_)
    throw InvalidArgument("negative observers require a decoy goal");
}

Objective::Terms Objective::evaluate(const Trajectory& traj) const
{
  const auto n = traj.size();
  Terms terms{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  for (const auto& obs : observers_)
  {
    if (obs.motive == 0.0)
      continue;
    const auto view = observe(traj, obs, goals_, cfg_.inference);
    const bool positive = obs.motive > 0.0;
    const std::size_t target = positive ? true_index_ : *decoy_index_;
    const double scale =
        positive ? obs.motive : static_cast<double>(cfg_.alpha_neg) * std::abs(obs.motive);
    auto& out = positive ? terms.pos : terms.neg;

    double partial = 0.0;
    for (std::size_t k = 0; k < view.sample_steps.size(); ++k)
    {
      partial += view.sample_posteriors[k][target] * view.weights[k];
      const auto t = static_cast<std::size_t>(view.sample_steps[k]);
      out[t] += scale * (partial / view.weight_total);
      terms.seen_motive[t] += std::abs(obs.motive);
    }
  }
  return terms;
}

double Objective::f_pos(std::size_t i, const Trajectory& traj) const
{
  return evaluate(traj).pos.at(i);
}

double Objective::f_neg(std::size_t i, const Trajectory& traj) const
{
  return evaluate(traj).neg.at(i);
}

double Objective::per_timestep_cost(std::size_t i, const Trajectory& traj) const
{
  return cost_vector(traj).at(i);
}

CostVector Objective::cost_vector(const Trajectory& traj) const
{
  const auto terms = evaluate(traj);
  CostVector costs(traj.size(), 0.0);
  for (std::size_t i = 0; i < traj.size(); ++i)
  {
    if (terms.seen_motive[i] > 0.0)
      costs[i] = -(terms.pos[i] + terms.neg[i]) / terms.seen_motive[i];
  }
  return costs;
}

double Objective::total_cost(const Trajectory& traj) const
{
  const auto costs = cost_vector(traj);
  return std::accumulate(costs.begin(), costs.end(), 0.0);
}

}  // namespace dubious
