#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dubious/geometry.hpp"
#include "dubious/legibility.hpp"
#include "dubious/objective.hpp"

namespace dubious
{

struct Scenario;

struct StompConfig
{
  int iterations = 1000;
  int rollouts_per_iter = 20;
  /// Marginal standard deviation of the most-perturbed interior waypoint, per coordinate.
  /// The default suits workspaces roughly ten units across.
  double noise_stddev = 0.03;
  /// Exponent scale h of the per-timestep rollout weighting.
  double sensitivity = 10.0;
  std::uint64_t seed = 0;
  /// Snapshot the current iterate every this many iterations (0 disables).
  int record_every = 0;
  /// Worker threads for rollout evaluation; results do not depend on this value.
  int threads = 1;

  void validate() const;

  friend bool operator==(const StompConfig&, const StompConfig&) = default;
};

/// Finite-difference smoothing quantities over the interior waypoints of a T-step trajectory.
struct SmoothingOperator
{
  /// Throws InvalidArgument("trajectory too short") for T < 3.
  explicit SmoothingOperator(int steps);

  int steps;
  /// Second-difference matrix [1, -2, 1] over the T - 1 interior waypoints.
  Eigen::MatrixXd acceleration;
  /// R = A^T A.
  Eigen::MatrixXd precision;
  /// R^-1.
  Eigen::MatrixXd covariance;
  /// R^-1 with every column rescaled to a maximum magnitude of 1/T.
  Eigen::MatrixXd projection;
  /// Lower Cholesky factor of R^-1 normalized to a unit maximum entry.
  Eigen::MatrixXd noise_factor;

  int interior() const { return steps - 1; }
};

struct Rollout
{
  /// Interior noise, one row per interior waypoint, columns (x, y).
  Eigen::MatrixXd noise;
  Trajectory candidate;
};

struct Snapshot
{
  int iteration;
  Trajectory trajectory;
};

struct OptimizationResult
{
  Trajectory best_trajectory;
  double best_total_cost = 0.0;
  std::vector<Snapshot> snapshots;
  /// Entry 0 is the initialization; entry k the best cost after iteration k.
  std::vector<double> cost_history;
};

std::vector<Rollout> sample_rollouts(const Trajectory& base, const SmoothingOperator& smoothing,
                                     const StompConfig& cfg, const Bounds& bounds,
                                     std::mt19937_64& rng);

/// Probability-weighted update from an already sampled and evaluated set of rollouts.
Trajectory combine_rollouts(const Trajectory& base, const std::vector<Rollout>& rollouts,
                            const std::vector<CostVector>& costs,
                            const SmoothingOperator& smoothing, const StompConfig& cfg,
                            const Bounds& bounds);

/// Evaluates every rollout's cost vector, possibly on several threads.
std::vector<CostVector> evaluate_rollouts(const std::vector<Rollout>& rollouts,
                                          const Objective& objective, int threads);

Trajectory stomp_step(const Trajectory& base, const Scenario& scenario, const StompConfig& cfg,
                      std::mt19937_64& rng);

/// Runs STOMP from the straight line S -> true goal and returns the best iterate seen.
OptimizationResult optimize(const Scenario& scenario, const StompConfig& cfg);

}  // namespace dubious
