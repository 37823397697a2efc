#include "dubious/run.hpp"

#include <json.hpp>

#include "dubious/baselines.hpp"
#include "dubious/error.hpp"
#include "dubious/export.hpp"
#include "scenario_json.hpp"

#ifndef DUBIOUS_VERSION
#define DUBIOUS_VERSION "unknown"
#endif

namespace dubious
{

namespace fs = std::filesystem;

std::string library_version() { return DUBIOUS_VERSION; }

Strategy parse_strategy(std::string_view name)
{
  if (name == "dubious-decoy")
    return Strategy::DubiousDecoy;
  if (name == "dubious-ambiguous")
    return Strategy::DubiousAmbiguous;
  if (name == "efficient")
    return Strategy::Efficient;
  if (name == "max-legible")
    return Strategy::MaxLegible;
  if (name == "max-decoy")
    return Strategy::MaxDecoy;
  throw InvalidArgument("unknown strategy '" + std::string(name) + "'");
}

std::string to_string(Strategy strategy)
{
  switch (strategy)
  {
    case Strategy::DubiousDecoy: return "dubious-decoy";
    case Strategy::DubiousAmbiguous: return "dubious-ambiguous";
    case Strategy::Efficient: return "efficient";
    case Strategy::MaxLegible: return "max-legible";
    case Strategy::MaxDecoy: return "max-decoy";
  }
  return "unknown";
}

PlanOutcome plan(const Scenario& scenario, Strategy strategy)
{
  scenario.validate();
  switch (strategy)
  {
    case Strategy::Efficient:
      return {efficient_trajectory(scenario.start, scenario.true_goal_position(),
                                   scenario.trajectory_steps),
              std::nullopt};
    case Strategy::DubiousDecoy:
    case Strategy::DubiousAmbiguous:
    {
      Scenario derived = scenario;
      derived.objective.alpha_neg = strategy == Strategy::DubiousDecoy ? 1 : -1;
      auto result = optimize(derived, derived.stomp);
      auto best = result.best_trajectory;
      return {std::move(best), std::move(result)};
    }
    case Strategy::MaxLegible:
    {
      auto result = optimize(full_view_scenario(scenario, 1.0, scenario.objective.alpha_neg),
                             scenario.stomp);
      auto best = result.best_trajectory;
      return {std::move(best), std::move(result)};
    }
    case Strategy::MaxDecoy:
    {
      const auto derived = full_view_scenario(scenario, -1.0, 1);
      if (!derived.objective.decoy_goal)
        throw InvalidArgument("max-decoy needs a decoy goal");
      auto result = optimize(derived, scenario.stomp);
      auto best = result.best_trajectory;
      return {std::move(best), std::move(result)};
    }
  }
  throw InvalidArgument("unknown strategy");
}

std::string format_manifest(const Scenario& scenario, Strategy strategy)
{
  nlohmann::json doc;
  doc["tool"] = "dubious";
  doc["version"] = library_version();
  doc["strategy"] = to_string(strategy);
  doc["scenario"] = scenario_to_json(scenario);
  return doc.dump(2) + "\n";
}

Manifest parse_manifest(std::string_view text)
{
  nlohmann::json doc;
  try
  {
    doc = nlohmann::json::parse(text.begin(), text.end());
  }
  catch (const nlohmann::json::parse_error& e)
  {
    throw Error(std::string("malformed manifest: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("strategy") || !doc.contains("scenario") ||
      !doc["strategy"].is_string())
    throw Error("manifest needs 'strategy' and 'scenario'");
  return {scenario_from_json(doc["scenario"]), parse_strategy(doc["strategy"].get<std::string>()),
          doc.value("version", std::string())};
}

RunArtifacts run_plan(const Scenario& scenario, Strategy strategy, const fs::path& out_dir)
{
  const auto outcome = plan(scenario, strategy);
  const auto label = to_string(strategy);

  fs::create_directories(out_dir);
  RunArtifacts art;
  art.directory = out_dir;
  art.manifest = out_dir / "manifest.json";
  art.trajectory = out_dir / "trajectory.csv";
  art.metrics = out_dir / "metrics.csv";
  art.scene_svg = out_dir / "scene.svg";

  write_text_file(art.manifest, format_manifest(scenario, strategy));
  write_text_file(art.trajectory, format_trajectory_csv(outcome.trajectory));

  const std::vector<LabeledTrajectory> labeled{{label, outcome.trajectory}};
  write_text_file(art.metrics, format_metrics_table(build_report(scenario, labeled)));
  write_text_file(art.scene_svg, render_scene_svg(scenario, labeled));

  for (const auto& obs : scenario.observers)
  {
    const auto belief =
        belief_trace(outcome.trajectory, obs, scenario.goals, scenario.objective.inference);
    const auto csv = out_dir / ("beliefs_" + obs.id + ".csv");
    const auto svg = out_dir / ("beliefs_" + obs.id + ".svg");
    write_text_file(csv, format_belief_csv(belief, scenario.goals));
    write_text_file(svg, render_belief_svg(belief, scenario.goals, obs.id + " / " + label));
    art.belief_csvs.push_back(csv);
    art.belief_svgs.push_back(svg);
  }

  if (outcome.optimization)
  {
    art.cost_history = out_dir / "cost_history.csv";
    write_text_file(art.cost_history, format_cost_history_csv(outcome.optimization->cost_history));
    if (!outcome.optimization->snapshots.empty())
    {
      art.snapshots = out_dir / "snapshots.csv";
      write_text_file(art.snapshots, format_snapshots_csv(outcome.optimization->snapshots));
    }
  }
  return art;
}

std::string run_report(const Scenario& scenario,
                       const std::vector<LabeledTrajectory>& trajectories,
                       const fs::path& out_file)
{
  auto table = format_metrics_table(build_report(scenario, trajectories));
  if (!out_file.empty())
  {
    if (out_file.has_parent_path())
      fs::create_directories(out_file.parent_path());
    write_text_file(out_file, table);
  }
  return table;
}

std::vector<fs::path> run_render(const Scenario& scenario,
                                 const std::vector<LabeledTrajectory>& trajectories,
                                 const fs::path& out_dir)
{
  fs::create_directories(out_dir);
  std::vector<fs::path> written;
  written.push_back(out_dir / "scene.svg");
  write_text_file(written.back(), render_scene_svg(scenario, trajectories));
  if (trajectories.empty())
    return written;

  const auto& first = trajectories.front();
  for (const auto& obs : scenario.observers)
  {
    const auto belief =
        belief_trace(first.trajectory, obs, scenario.goals, scenario.objective.inference);
    written.push_back(out_dir / ("beliefs_" + obs.id + ".csv"));
    write_text_file(written.back(), format_belief_csv(belief, scenario.goals));
    written.push_back(out_dir / ("beliefs_" + obs.id + ".svg"));
    write_text_file(written.back(),
                    render_belief_svg(belief, scenario.goals, obs.id + " / " + first.label));
  }
  return written;
}

}  // namespace dubious
