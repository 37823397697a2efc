#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dubious/geometry.hpp"

namespace dubious
{

using GoalId = std::string;

/// Fixed-length waypoint sequence; index t is the agent position at timestep t.
class Trajectory
{
public:
  Trajectory() = default;
  /// Throws InvalidArgument for fewer than two waypoints or non-finite coordinates.
  explicit Trajectory(std::vector<Point2> waypoints);

  std::size_t size() const { return waypoints_.size(); }
  /// Number of unit timesteps T (waypoints are indexed 0..T).
  int steps() const { return static_cast<int>(waypoints_.size()) - 1; }

  const Point2& operator[](std::size_t i) const { return waypoints_[i]; }
  Point2& operator[](std::size_t i) { return waypoints_[i]; }
  const Point2& front() const { return waypoints_.front(); }
  const Point2& back() const { return waypoints_.back(); }

  std::span<const Point2> points() const { return waypoints_; }
  /// Waypoints 0..t inclusive.
  std::span<const Point2> prefix(std::size_t t) const { return points().first(t + 1); }

  auto begin() const { return waypoints_.begin(); }
  auto end() const { return waypoints_.end(); }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

private:
  std::vector<Point2> waypoints_;
};

struct Goal
{
  GoalId id;
  Point2 position;

  friend bool operator==(const Goal&, const Goal&) = default;
};

/// Ordered candidate goals with a prior. Order is preserved everywhere posteriors are reported.
class GoalSet
{
public:
  GoalSet() = default;
  /// Uniform prior.
  explicit GoalSet(std::vector<Goal> goals);
  /// Prior must be non-negative and sum to 1 within 1e-9.
  GoalSet(std::vector<Goal> goals, std::vector<double> prior);

  std::size_t size() const { return goals_.size(); }
  const Goal& operator[](std::size_t i) const { return goals_[i]; }
  const std::vector<Goal>& goals() const { return goals_; }
  const std::vector<double>& prior() const { return prior_; }

  bool contains(const GoalId& id) const;
  /// Throws InvalidArgument when the id is unknown.
  std::size_t index_of(const GoalId& id) const;

  friend bool operator==(const GoalSet&, const GoalSet&) = default;

private:
  std::vector<Goal> goals_;
  std::vector<double> prior_;
};

/// Per-goal probabilities, aligned with GoalSet order.
struct GoalPosterior
{
  std::vector<double> probs;

  double operator[](std::size_t i) const { return probs[i]; }
  std::size_t size() const { return probs.size(); }

  friend bool operator==(const GoalPosterior&, const GoalPosterior&) = default;
};

struct InferenceConfig
{
  /// Multiplies every exponent argument of the goal likelihood.
  double temperature = 1.0;
  /// Lead required over every other goal for a guess to count as confident.
  double margin = 0.05;
  /// Divide the ambiguity score by the goal count (ceiling 1/|G| instead of 1).
  bool ambiguous_table_scaling = false;

  void validate() const;

  friend bool operator==(const InferenceConfig&, const InferenceConfig&) = default;
};

/// Half the summed squared step lengths (unit timestep).
double path_cost(std::span<const Point2> segment);

/// Cost of the constant-velocity straight line from q to g over the given number of steps.
double optimal_cost(Point2 q, Point2 g, int steps_remaining);

/// Posterior for an observer who saw motion with accumulated cost `observed_cost`, first seen at
/// `anchor` (timestep `anchor_step`) and last seen at `last` (timestep `last_step`).
GoalPosterior posterior_from_observation(double observed_cost, Point2 anchor, int anchor_step,
                                         Point2 last, int last_step, const GoalSet& goals,
                                         int total_steps, const InferenceConfig& cfg);

/// Posterior given a trajectory prefix anchored at prefix[0] (timestep 0) and ending at timestep
/// prefix.size() - 1.
GoalPosterior goal_posterior(std::span<const Point2> prefix, const GoalSet& goals,
                             int total_steps, const InferenceConfig& cfg);

/// goal_posterior for every prefix 0..T, computed incrementally.
std::vector<GoalPosterior> prefix_posteriors(const Trajectory& traj, const GoalSet& goals,
                                             const InferenceConfig& cfg);

/// Weighted mean with weights (n - 1 - k): the discrete form of the (T - t) time weighting.
/// A single value is returned as-is; an empty sequence yields 0.
double time_weighted_mean(std::span<const double> values);

/// 1 - (1/|G|) * sum over other goals of |P(true) - P(other)|, optionally divided by |G|.
double ambiguity_value(const GoalPosterior& post, std::size_t true_index, bool table_scaling);

/// Time-weighted probability of goal `index` over a sequence of posteriors.
double weighted_goal_probability(std::span<const GoalPosterior> beliefs, std::size_t index);
/// Time-weighted ambiguity over a sequence of posteriors.
double weighted_ambiguity(std::span<const GoalPosterior> beliefs, std::size_t true_index,
                          bool table_scaling);

double legibility_score(const Trajectory& traj, const GoalSet& goals, const GoalId& true_goal,
                        const InferenceConfig& cfg);

double illegibility_decoy_score(const Trajectory& traj, const GoalSet& goals,
                                const GoalId& decoy_goal, const InferenceConfig& cfg);

/// Requires at least two goals.
double illegibility_ambiguous_score(const Trajectory& traj, const GoalSet& goals,
                                    const GoalId& true_goal, const InferenceConfig& cfg);

/// max(decoy, ambiguous). Throws InvalidArgument when decoy_goal == true_goal.
double illegibility_score(const Trajectory& traj, const GoalSet& goals, const GoalId& true_goal,
                          const GoalId& decoy_goal, const InferenceConfig& cfg);

}  // namespace dubious
