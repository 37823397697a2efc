#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dubious/metrics.hpp"
#include "dubious/observers.hpp"
#include "dubious/scenario.hpp"
#include "dubious/stomp.hpp"

namespace dubious
{

/// "t,x,y" rows with round-trip precision.
std::string format_trajectory_csv(const Trajectory& traj);
Trajectory parse_trajectory_csv(std::string_view text);
Trajectory load_trajectory_csv(const std::filesystem::path& path);

/// Long format "t,goal,probability,visible": (T + 1) * |G| rows.
std::string format_belief_csv(const BeliefTrace& belief, const GoalSet& goals);

/// "iteration,best_total_cost" rows.
std::string format_cost_history_csv(const std::vector<double>& history);

/// "iteration,t,x,y" rows.
std::string format_snapshots_csv(const std::vector<Snapshot>& snapshots);

/// Comma-separated metrics table, one row per (trajectory, observer). Columns:
/// trajectory, observer, motive, Earliest, % Correct, Legibility, Illeg-Decoy, Illeg-Ambiguous.
std::string format_metrics_table(const std::vector<MetricsReport>& reports);

/// Workspace, observer regions (opacity grows with |motive|), goals, start and trajectories.
std::string render_scene_svg(const Scenario& scenario,
                             const std::vector<LabeledTrajectory>& trajectories);

/// Per-goal probability curves over time with visible intervals shaded.
std::string render_belief_svg(const BeliefTrace& belief, const GoalSet& goals,
                              const std::string& title);

void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace dubious
