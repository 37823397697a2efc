#include "dubious/observers.hpp"

#include <cmath>

#include "dubious/error.hpp"

namespace dubious
{

Observer::Observer(std::string id_, double motive_, ConvexPolygon region_)
    : id(std::move(id_)), motive(motive_), region(std::move(region_))
{
  if (!(motive >= -1.0 && motive <= 1.0))
    throw InvalidArgument("observer '" + id + "': motive must lie in [-1, 1]");
}

std::vector<std::pair<std::size_t, std::size_t>> VisibleTrace::segments() const
{
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t begin = 0;
  for (std::size_t k = 1; k <= samples.size(); ++k)
  {
    if (k == samples.size() || samples[k].step != samples[k - 1].step + 1)
    {
      out.emplace_back(begin, k);
      begin = k;
    }
  }
  return out;
}

VisibleTrace visible_trace(const Trajectory& traj, const Observer& obs, int upto)
{
  if (upto < 0 || upto > traj.steps())
    throw InvalidArgument("visible_trace: timestep out of range");
  VisibleTrace trace;
  for (int t = 0; t <= upto; ++t)
  {
    if (obs.sees(traj[t]))
      trace.samples.push_back({t, traj[t]});
  }
  return trace;
}

std::vector<GoalPosterior> visible_posteriors(const VisibleTrace& trace, const GoalSet& goals,
                                              int total_steps, const InferenceConfig& cfg)
{
  std::vector<GoalPosterior> out;
  out.reserve(trace.size());
  double cost = 0.0;
  for (std::size_t k = 0; k < trace.size(); ++k)
  {
    // Unseen travel between sightings is not charged.
    if (k > 0 && trace.samples[k].step == trace.samples[k - 1].step + 1)
      cost += 0.5 * squared_norm(trace.samples[k].point - trace.samples[k - 1].point);
    const auto& anchor = trace.samples.front();
    out.push_back(posterior_from_observation(cost, anchor.point, anchor.step,
                                             trace.samples[k].point, trace.samples[k].step, goals,
                                             total_steps, cfg));
  }
  return out;
}

GoalPosterior observed_posterior(const VisibleTrace& trace, const GoalSet& goals, int total_steps,
                                 const InferenceConfig& cfg)
{
  if (trace.empty())
    return GoalPosterior{goals.prior()};
  return visible_posteriors(trace, goals, total_steps, cfg).back();
}

BeliefTrace belief_trace(const Trajectory& traj, const Observer& obs, const GoalSet& goals,
                         const InferenceConfig& cfg)
{
  const auto trace = visible_trace(traj, obs, traj.steps());
  const auto seen = visible_posteriors(trace, goals, traj.steps(), cfg);

  BeliefTrace belief;
  belief.posteriors.reserve(traj.size());
  belief.visible.reserve(traj.size());
  GoalPosterior current{goals.prior()};
  std::size_t next = 0;
  for (int t = 0; t <= traj.steps(); ++t)
  {
    const bool visible = next < trace.size() && trace.samples[next].step == t;
    if (visible)
      current = seen[next++];
    belief.posteriors.push_back(current);
    belief.visible.push_back(visible);
  }
  return belief;
}

std::optional<GoalId> confident_guess(const GoalPosterior& post, const GoalSet& goals,
                                      double margin)
{
  if (post.size() != goals.size() || post.size() == 0)
    throw InvalidArgument("posterior does not match the goal set");
  std::size_t best = 0;
  for (std::size_t g = 1; g < post.size(); ++g)
  {
    if (post[g] > post[best] || (post[g] == post[best] && goals[g].id < goals[best].id))
      best = g;
  }
  for (std::size_t g = 0; g < post.size(); ++g)
  {
    if (g != best && !(post[best] >= post[g] + margin))
      return std::nullopt;
  }
  return goals[best].id;
}

}  // namespace dubious
