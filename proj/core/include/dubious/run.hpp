#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dubious/metrics.hpp"
#include "dubious/scenario.hpp"
#include "dubious/stomp.hpp"

namespace dubious
{

enum class Strategy
{
  DubiousDecoy,
  DubiousAmbiguous,
  Efficient,
  MaxLegible,
  MaxDecoy,
};

/// Accepts dubious-decoy, dubious-ambiguous, efficient, max-legible, max-decoy.
Strategy parse_strategy(std::string_view name);
std::string to_string(Strategy strategy);

struct PlanOutcome
{
  Trajectory trajectory;
  /// Absent for the efficient strategy, which runs no optimizer.
  std::optional<OptimizationResult> optimization;
};

/// Produces the trajectory for a strategy using the scenario's own optimizer settings.
PlanOutcome plan(const Scenario& scenario, Strategy strategy);

/// Files written by run_plan, all inside `directory`.
struct RunArtifacts
{
  std::filesystem::path directory;
  std::filesystem::path manifest;
  std::filesystem::path trajectory;
  std::filesystem::path metrics;
  std::filesystem::path scene_svg;
  std::filesystem::path cost_history;
  std::filesystem::path snapshots;
  std::vector<std::filesystem::path> belief_csvs;
  std::vector<std::filesystem::path> belief_svgs;
};

/// Plans, then writes trajectory.csv, metrics.csv, beliefs_<observer>.{csv,svg}, scene.svg,
/// cost_history.csv, snapshots.csv (when recording) and manifest.json.
RunArtifacts run_plan(const Scenario& scenario, Strategy strategy,
                      const std::filesystem::path& out_dir);

/// Reproducible description of a run: tool version, strategy and the effective scenario.
std::string format_manifest(const Scenario& scenario, Strategy strategy);

struct Manifest
{
  Scenario scenario;
  Strategy strategy;
  std::string version;
};
Manifest parse_manifest(std::string_view text);

/// Metrics table for the given labeled trajectories, written to `out_file`.
std::string run_report(const Scenario& scenario,
                       const std::vector<LabeledTrajectory>& trajectories,
                       const std::filesystem::path& out_file);

/// Writes scene.svg plus per-observer belief plots for the first trajectory into `out_dir`.
std::vector<std::filesystem::path> run_render(const Scenario& scenario,
                                              const std::vector<LabeledTrajectory>& trajectories,
                                              const std::filesystem::path& out_dir);

std::string library_version();

}  // namespace dubious
