#pragma once

#include "dubious/legibility.hpp"
#include "dubious/scenario.hpp"
#include "dubious/stomp.hpp"

namespace dubious
{

/// T + 1 evenly spaced waypoints on the segment from start to goal.
Trajectory efficient_trajectory(Point2 start, Point2 goal, int steps);

/// The scenario with its observers replaced by one full-view observer of the given motive.
Scenario full_view_scenario(const Scenario& scenario, double motive, int alpha_neg);

/// Optimized for a single +1 observer that sees the whole workspace.
Trajectory max_legible_baseline(const Scenario& scenario, const StompConfig& cfg);

/// Optimized for a single -1 observer that sees the whole workspace, decoy strategy.
Trajectory max_decoy_baseline(const Scenario& scenario, const StompConfig& cfg);

}  // namespace dubious
