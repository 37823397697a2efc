#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dubious/geometry.hpp"
#include "dubious/legibility.hpp"

namespace dubious
{

/// An observer with a motive in [-1, 1] who perceives the agent only inside its region.
struct Observer
{
  Observer(std::string id, double motive, ConvexPolygon region);

  std::string id;
  double motive;
  ConvexPolygon region;

  bool sees(Point2 p) const { return point_in_polygon(p, region); }
  bool is_positive() const { return motive >= 0.0; }

  friend bool operator==(const Observer&, const Observer&) = default;
};

struct VisibleSample
{
  int step;
  Point2 point;

  friend bool operator==(const VisibleSample&, const VisibleSample&) = default;
};

/// Waypoints of a prefix that fall inside an observer region, with their original timesteps.
struct VisibleTrace
{
  std::vector<VisibleSample> samples;

  bool empty() const { return samples.empty(); }
  std::size_t size() const { return samples.size(); }
  /// Maximal runs of consecutive timesteps as half-open [first, last) ranges into `samples`.
  std::vector<std::pair<std::size_t, std::size_t>> segments() const;
};

/// Per-timestep belief of one observer over a whole trajectory.
struct BeliefTrace
{
  std::vector<GoalPosterior> posteriors;
  std::vector<bool> visible;

  std::size_t size() const { return posteriors.size(); }
};

VisibleTrace visible_trace(const Trajectory& traj, const Observer& obs, int upto);

/// Posterior from what the observer saw: segment costs only, anchored at the first sighting.
/// An empty trace yields the prior.
GoalPosterior observed_posterior(const VisibleTrace& trace, const GoalSet& goals, int total_steps,
                                 const InferenceConfig& cfg);

/// observed_posterior of every prefix of the trace: entry k uses samples 0..k.
std::vector<GoalPosterior> visible_posteriors(const VisibleTrace& trace, const GoalSet& goals,
                                              int total_steps, const InferenceConfig& cfg);

/// Belief at every timestep; frozen while the agent is out of view, prior before first sighting.
BeliefTrace belief_trace(const Trajectory& traj, const Observer& obs, const GoalSet& goals,
                         const InferenceConfig& cfg);

/// Argmax goal when it leads every other goal by at least `margin`; ties go to the lowest id.
std::optional<GoalId> confident_guess(const GoalPosterior& post, const GoalSet& goals,
                                      double margin);

}  // namespace dubious
