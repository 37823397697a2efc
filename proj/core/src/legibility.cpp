#include "dubious/legibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "dubious/error.hpp"

namespace dubious
{

Trajectory::Trajectory(std::vector<Point2> waypoints) : waypoints_(std::move(waypoints))
{
  if (waypoints_.size() < 2)
    throw InvalidArgument("trajectory needs at least two waypoints");
  for (const auto& p : waypoints_)
  {
    if (!is_finite(p))
      throw InvalidArgument("trajectory waypoints must be finite");
  }
}

GoalSet::GoalSet(std::vector<Goal> goals)
    : GoalSet(goals, std::vector<double>(goals.size(), goals.empty() ? 0.0 : 1.0 / goals.size()))
{
}

GoalSet::GoalSet(std::vector<Goal> goals, std::vector<double> prior)
    : goals_(std::move(goals)), prior_(std::move(prior))
{
  if (goals_.empty())
    throw InvalidArgument("goal set must contain at least one goal");
  if (prior_.size() != goals_.size())
    throw InvalidArgument("prior length must match goal count");
  std::set<GoalId> seen;
  for (const auto& g : goals_)
  {
    if (!seen.insert(g.id).second)
      throw InvalidArgument("duplicate goal id '" + g.id + "'");
    if (!is_finite(g.position))
      throw InvalidArgument("goal '" + g.id + "' has a non-finite position");
  }
  double total = 0.0;
  for (double p : prior_)
  {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw InvalidArgument("prior probabilities must be finite and non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InvalidArgument("prior must sum to 1");
}

bool GoalSet::contains(const GoalId& id) const
{
  return std::any_of(goals_.begin(), goals_.end(), [&](const Goal& g) { return g.id == id; });
}

std::size_t GoalSet::index_of(const GoalId& id) const
{
  for (std::size_t i = 0; i < goals_.size(); ++i)
  {
    if (goals_[i].id == id)
      return i;
  }
  throw InvalidArgument("unknown goal id '" + id + "'");
}

void InferenceConfig::validate() const
{
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw InvalidArgument("temperature must be a positive finite number");
  if (!(margin >= 0.0 && margin < 1.0))
    throw InvalidArgument("margin must lie in [0, 1)");
}

double path_cost(std::span<const Point2> segment)
{
  double cost = 0.0;
  for (std::size_t i = 1; i < segment.size(); ++i)
    cost += 0.5 * squared_norm(segment[i] - segment[i - 1]);
  return cost;
}

double optimal_cost(Point2 q, Point2 g, int steps_remaining)
{
  if (steps_remaining < 1)
    throw InvalidArgument("optimal_cost needs at least one remaining step");
  return squared_norm(g - q) / (2.0 * steps_remaining);
}

GoalPosterior posterior_from_observation(double observed_cost, Point2 anchor, int anchor_step,
                                         Point2 last, int last_step, const GoalSet& goals,
                                         int total_steps, const InferenceConfig& cfg)
{
  const auto n = goals.size();
  const int remaining_from_anchor = std::max(total_steps - anchor_step, 1);
  const int remaining_from_last = std::max(total_steps - last_step, 1);

  std::vector<double> exponents(n);
  double max_exponent = -std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < n; ++g)
  {
    const Point2 goal = goals[g].position;
    const double excess = observed_cost + optimal_cost(last, goal, remaining_from_last) -
                          optimal_cost(anchor, goal, remaining_from_anchor);
    exponents[g] = -cfg.temperature * excess + std::log(goals.prior()[g]);
    if (exponents[g] > max_exponent)
      max_exponent = exponents[g];
  }
  if (!std::isfinite(max_exponent))
    throw DegeneratePosterior();

  GoalPosterior post{std::vector<double>(n)};
  double total = 0.0;
  for (std::size_t g = 0; g < n; ++g)
  {
    post.probs[g] = std::exp(exponents[g] - max_exponent);
    total += post.probs[g];
  }
  if (!(total > 0.0) || !std::isfinite(total))
    throw DegeneratePosterior();
  for (auto& p : post.probs)
    p /= total;
  return post;
}

GoalPosterior goal_posterior(std::span<const Point2> prefix, const GoalSet& goals,
                             int total_steps, const InferenceConfig& cfg)
{
  if (prefix.empty())
    throw InvalidArgument("goal_posterior needs a non-empty prefix");
  const int t = static_cast<int>(prefix.size()) - 1;
  if (t > total_steps)
    throw InvalidArgument("prefix is longer than the trajectory");
  return posterior_from_observation(path_cost(prefix), prefix.front(), 0, prefix.back(), t, goals,
                                    total_steps, cfg);
}

std::vector<GoalPosterior> prefix_posteriors(const Trajectory& traj, const GoalSet& goals,
                                             const InferenceConfig& cfg)
{
  std::vector<GoalPosterior> out;
  out.reserve(traj.size());
  const int total = traj.steps();
  double cost = 0.0;
  for (std::size_t t = 0; t < traj.size(); ++t)
  {
    if (t > 0)
      cost += 0.5 * squared_norm(traj[t] - traj[t - 1]);
    out.push_back(posterior_from_observation(cost, traj.front(), 0, traj[t],
                                             static_cast<int>(t), goals, total, cfg));
  }
  return out;
}

double time_weighted_mean(std::span<const double> values)
{
  const auto n = values.size();
  if (n == 0)
    return 0.0;
  if (n == 1)
    return values[0];
  double weighted = 0.0;
  double weight_total = 0.0;
  for (std::size_t k = 0; k < n; ++k)
  {
    const double w = static_cast<double>(n - 1 - k);
    weighted += values[k] * w;
    weight_total += w;
  }
  return weighted / weight_total;
}

double ambiguity_value(const GoalPosterior& post, std::size_t true_index, bool table_scaling)
{
  const double n = static_cast<double>(post.size());
  double spread = 0.0;
  for (std::size_t g = 0; g < post.size(); ++g)
  {
    if (g != true_index)
      spread += std::abs(post[true_index] - post[g]);
  }
  const double value = 1.0 - spread / n;
  return table_scaling ? value / n : value;
}

double weighted_goal_probability(std::span<const GoalPosterior> beliefs, std::size_t index)
{
  std::vector<double> values(beliefs.size());
  std::transform(beliefs.begin(), beliefs.end(), values.begin(),
                 [index](const GoalPosterior& p) { return p[index]; });
  return time_weighted_mean(values);
}

double weighted_ambiguity(std::span<const GoalPosterior> beliefs, std::size_t true_index,
                          bool table_scaling)
{
  std::vector<double> values(beliefs.size());
  std::transform(beliefs.begin(), beliefs.end(), values.begin(), [&](const GoalPosterior& p) {
    return ambiguity_value(p, true_index, table_scaling);
  });
  return time_weighted_mean(values);
}

double legibility_score(const Trajectory& traj, const GoalSet& goals, const GoalId& true_goal,
                        const InferenceConfig& cfg)
{
  const auto index = goals.index_of(true_goal);
  return weighted_goal_probability(prefix_posteriors(traj, goals, cfg), index);
}

double illegibility_decoy_score(const Trajectory& traj, const GoalSet& goals,
                                const GoalId& decoy_goal, const InferenceConfig& cfg)
{
  const auto index = goals.index_of(decoy_goal);
  return weighted_goal_probability(prefix_posteriors(traj, goals, cfg), index);
}

double illegibility_ambiguous_score(const Trajectory& traj, const GoalSet& goals,
                                    const GoalId& true_goal, const InferenceConfig& cfg)
{
  if (goals.size() < 2)
    throw InvalidArgument("ambiguity needs at least two goals");
  const auto index = goals.index_of(true_goal);
  return weighted_ambiguity(prefix_posteriors(traj, goals, cfg), index,
                            cfg.ambiguous_table_scaling);
}

double illegibility_score(const Trajectory& traj, const GoalSet& goals, const GoalId& true_goal,
                          const GoalId& decoy_goal, const InferenceConfig& cfg)
{
  if (decoy_goal == true_goal)
    throw InvalidArgument("decoy equals true goal");
  return std::max(illegibility_decoy_score(traj, goals, decoy_goal, cfg),
                  illegibility_ambiguous_score(traj, goals, true_goal, cfg));
}

}  // namespace dubious
