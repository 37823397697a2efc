#include "dubious/stomp.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "dubious/baselines.hpp"
#include "dubious/error.hpp"
#include "dubious/scenario.hpp"

namespace dubious
{

namespace
{

constexpr double kWeightEpsilon = 1e-10;

Trajectory pinned_clamped(std::vector<Point2> points, const Trajectory& base,
                          const Bounds& bounds)
{
  for (std::size_t i = 1; i + 1 < points.size(); ++i)
    points[i] = clamp_to_bounds(points[i], bounds);
  points.front() = base.front();
  points.back() = base.back();
  return Trajectory(std::move(points));
}

}  // namespace

void StompConfig::validate() const
{
  if (iterations < 0)
    throw InvalidArgument("stomp.iterations must be non-negative");
  if (rollouts_per_iter < 1)
    throw InvalidArgument("stomp.rollouts_per_iter must be positive");
  if (!(noise_stddev >= 0.0) || !std::isfinite(noise_stddev))
    throw InvalidArgument("stomp.noise_stddev must be non-negative");
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity))
    throw InvalidArgument("stomp.sensitivity must be positive");
  if (record_every < 0)
    throw InvalidArgument("stomp.record_every must be non-negative");
  if (threads < 1)
    throw InvalidArgument("stomp.threads must be positive");
}

SmoothingOperator::SmoothingOperator(int steps_) : steps(steps_)
{
  if (steps < 3)
    throw InvalidArgument("trajectory too short");
  const int n = interior();

  acceleration = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r < n; ++r)
  {
    if (r > 0)
      acceleration(r, r - 1) = 1.0;
    acceleration(r, r) = -2.0;
    if (r + 1 < n)
      acceleration(r, r + 1) = 1.0;
  }
  precision = acceleration.transpose() * acceleration;
  covariance = precision.llt().solve(Eigen::MatrixXd::Identity(n, n));
  covariance = 0.5 * (covariance + covariance.transpose());

  projection = covariance;
  for (int c = 0; c < n; ++c)
  {
    const double peak = projection.col(c).cwiseAbs().maxCoeff();
    projection.col(c) *= 1.0 / (peak * steps);
  }

  const Eigen::MatrixXd unit_covariance = covariance / covariance.cwiseAbs().maxCoeff();
  noise_factor = unit_covariance.llt().matrixL();
}

std::vector<Rollout> sample_rollouts(const Trajectory& base, const SmoothingOperator& smoothing,
                                     const StompConfig& cfg, const Bounds& bounds,
                                     std::mt19937_64& rng)
{
  const int n = smoothing.interior();
  if (base.steps() != smoothing.steps)
    throw InvalidArgument("rollout base does not match the smoothing operator");

  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Rollout> rollouts;
  rollouts.reserve(cfg.rollouts_per_iter);
  for (int k = 0; k < cfg.rollouts_per_iter; ++k)
  {
    Eigen::MatrixXd white(n, 2);
    for (int d = 0; d < 2; ++d)
    {
      for (int i = 0; i < n; ++i)
        white(i, d) = normal(rng);
    }
    Eigen::MatrixXd noise = cfg.noise_stddev * (smoothing.noise_factor * white);

    std::vector<Point2> points(base.begin(), base.end());
    for (int i = 0; i < n; ++i)
      points[i + 1] = points[i + 1] + Point2{noise(i, 0), noise(i, 1)};
    rollouts.push_back({std::move(noise), pinned_clamped(std::move(points), base, bounds)});
  }
  return rollouts;
}

std::vector<CostVector> evaluate_rollouts(const std::vector<Rollout>& rollouts,
                                          const Objective& objective, int threads)
{
  std::vector<CostVector> costs(rollouts.size());
  const auto workers =
      static_cast<std::size_t>(std::clamp<int>(threads, 1, static_cast<int>(rollouts.size())));
  if (workers <= 1)
  {
    for (std::size_t k = 0; k < rollouts.size(); ++k)
      costs[k] = objective.cost_vector(rollouts[k].candidate);
    return costs;
  }

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
    {
      pool.emplace_back([&, w] {
        try
        {
          for (std::size_t k = w; k < rollouts.size(); k += workers)
            costs[k] = objective.cost_vector(rollouts[k].candidate);
        }
        catch (...)
        {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
  {
    if (e)
      std::rethrow_exception(e);
  }
  return costs;
}

Trajectory combine_rollouts(const Trajectory& base, const std::vector<Rollout>& rollouts,
                            const std::vector<CostVector>& costs,
                            const SmoothingOperator& smoothing, const StompConfig& cfg,
                            const Bounds& bounds)
{
  const int n = smoothing.interior();
  const auto count = rollouts.size();
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(n, 2);
  std::vector<double> weights(count);
  for (int i = 0; i < n; ++i)
  {
    const std::size_t t = static_cast<std::size_t>(i) + 1;
    double lo = costs[0][t];
    double hi = costs[0][t];
    for (std::size_t k = 1; k < count; ++k)
    {
      lo = std::min(lo, costs[k][t]);
      hi = std::max(hi, costs[k][t]);
    }
    double total = 0.0;
    for (std::size_t k = 0; k < count; ++k)
    {
      weights[k] = std::exp(-cfg.sensitivity * (costs[k][t] - lo) / (hi - lo + kWeightEpsilon));
      total += weights[k];
    }
    for (std::size_t k = 0; k < count; ++k)
      delta.row(i) += (weights[k] / total) * rollouts[k].noise.row(i);
  }

  const Eigen::MatrixXd update = smoothing.projection * delta;
  std::vector<Point2> points(base.begin(), base.end());
  for (int i = 0; i < n; ++i)
    points[i + 1] = points[i + 1] + Point2{update(i, 0), update(i, 1)};
  return pinned_clamped(std::move(points), base, bounds);
}

Trajectory stomp_step(const Trajectory& base, const Scenario& scenario, const StompConfig& cfg,
                      std::mt19937_64& rng)
{
  const SmoothingOperator smoothing(base.steps());
  const Objective objective = scenario.make_objective();
  const auto rollouts = sample_rollouts(base, smoothing, cfg, scenario.bounds, rng);
  const auto costs = evaluate_rollouts(rollouts, objective, cfg.threads);
  return combine_rollouts(base, rollouts, costs, smoothing, cfg, scenario.bounds);
}

OptimizationResult optimize(const Scenario& scenario, const StompConfig& cfg)
{
  scenario.validate();
  cfg.validate();
  const Objective objective = scenario.make_objective();

  Trajectory current =
      efficient_trajectory(scenario.start, scenario.true_goal_position(), scenario.trajectory_steps);
  OptimizationResult result;
  result.best_trajectory = current;
  result.best_total_cost = objective.total_cost(current);
  result.cost_history.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
  result.cost_history.push_back(result.best_total_cost);
  if (cfg.iterations == 0)
    return result;

  const SmoothingOperator smoothing(scenario.trajectory_steps);
  std::mt19937_64 rng(cfg.seed);
  for (int iter = 1; iter <= cfg.iterations; ++iter)
  {
    const auto rollouts = sample_rollouts(current, smoothing, cfg, scenario.bounds, rng);
    const auto costs = evaluate_rollouts(rollouts, objective, cfg.threads);
    current = combine_rollouts(current, rollouts, costs, smoothing, cfg, scenario.bounds);

    const double cost = objective.total_cost(current);
    if (cost < result.best_total_cost)
    {
      result.best_total_cost = cost;
      result.best_trajectory = current;
    }
    result.cost_history.push_back(result.best_total_cost);
    if (cfg.record_every > 0 && iter % cfg.record_every == 0)
      result.snapshots.push_back({iter, current});
  }
  return result;
}

}  // namespace dubious
