// Command-line driver: plan, report, render and validate mixed-motive scenarios.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dubious/error.hpp"
#include "dubious/export.hpp"
#include "dubious/run.hpp"
#include "dubious/scenario_io.hpp"

namespace fs = std::filesystem;

namespace
{

// "label=path" or plain "path" (label = file stem).
std::vector<dubious::LabeledTrajectory> load_trajectories(const std::vector<std::string>& specs)
{
  std::vector<dubious::LabeledTrajectory> out;
  for (const auto& spec : specs)
  {
    const auto eq = spec.find('=');
    const fs::path path = eq == std::string::npos ? spec : spec.substr(eq + 1);
    const std::string label = eq == std::string::npos ? path.stem().string() : spec.substr(0, eq);
    out.push_back({label, dubious::load_trajectory_csv(path)});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Mixed-motive limited-observability legible motion planner"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dubious::library_version());

  std::string scenario_path;
  std::string manifest_path;
  std::string strategy_name = "dubious-decoy";
  std::string out_dir;
  std::vector<std::string> trajectory_specs;
  std::vector<std::string> validate_paths;
  int iterations = -1;
  long long seed = -1;
  int snapshot_every = -1;
  int threads = -1;

  auto* plan = app.add_subcommand("plan", "Optimize a trajectory and write run artifacts");
  auto* source = plan->add_option_group("source");
  source->add_option("--scenario", scenario_path, "Scenario JSON file")->check(CLI::ExistingFile);
  source->add_option("--manifest", manifest_path, "Re-run from a manifest.json")
      ->check(CLI::ExistingFile);
  source->require_option(1);
  plan->add_option("--strategy", strategy_name,
                   "dubious-decoy | dubious-ambiguous | efficient | max-legible | max-decoy");
  plan->add_option("--iterations", iterations, "Override stomp.iterations")
      ->check(CLI::NonNegativeNumber);
  plan->add_option("--seed", seed, "Override stomp.seed")->check(CLI::NonNegativeNumber);
  plan->add_option("--snapshot-every", snapshot_every, "Override stomp.record_every")
      ->check(CLI::NonNegativeNumber);
  plan->add_option("--threads", threads, "Rollout evaluation threads")->check(CLI::PositiveNumber);
  plan->add_option("--out", out_dir, "Output directory")->required();

  auto* report = app.add_subcommand("report", "Metrics table for existing trajectories");
  report->add_option("--scenario", scenario_path, "Scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--trajectory,trajectories", trajectory_specs, "[label=]trajectory.csv")
      ->required();
  report->add_option("--out", out_dir, "Output directory for metrics.csv");

  auto* render = app.add_subcommand("render", "SVG scene and belief plots");
  render->add_option("--scenario", scenario_path, "Scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  render->add_option("--trajectory,trajectories", trajectory_specs, "[label=]trajectory.csv");
  render->add_option("--out", out_dir, "Output directory")->required();

  auto* validate = app.add_subcommand("validate", "Check scenario files against the schema");
  validate->add_option("--scenario,scenarios", validate_paths, "Scenario JSON files")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try
  {
    if (*plan)
    {
      dubious::Scenario scenario;
      dubious::Strategy strategy = dubious::parse_strategy(strategy_name);
      if (!manifest_path.empty())
      {
        auto manifest = dubious::parse_manifest(dubious::read_text_file(manifest_path));
        scenario = std::move(manifest.scenario);
        if (plan->count("--strategy") == 0)
          strategy = manifest.strategy;
      }
      else
      {
        scenario = dubious::load_scenario(scenario_path);
      }
      if (iterations >= 0)
        scenario.stomp.iterations = iterations;
      if (seed >= 0)
        scenario.stomp.seed = static_cast<std::uint64_t>(seed);
      if (snapshot_every >= 0)
        scenario.stomp.record_every = snapshot_every;
      if (threads > 0)
        scenario.stomp.threads = threads;

      const auto art = dubious::run_plan(scenario, strategy, out_dir);
      std::cout << dubious::read_text_file(art.metrics);
      std::cerr << "wrote " << art.directory.string() << "\n";
    }
    else if (*report)
    {
      const auto scenario = dubious::load_scenario(scenario_path);
      const fs::path out = out_dir.empty() ? fs::path() : fs::path(out_dir) / "metrics.csv";
      std::cout << dubious::run_report(scenario, load_trajectories(trajectory_specs), out);
    }
    else if (*render)
    {
      const auto scenario = dubious::load_scenario(scenario_path);
      for (const auto& p :
           dubious::run_render(scenario, load_trajectories(trajectory_specs), out_dir))
        std::cout << p.string() << "\n";
    }
    else if (*validate)
    {
      int failures = 0;
      for (const auto& path : validate_paths)
      {
        try
        {
          const auto s = dubious::load_scenario(path);
          std::cout << path << ": ok (" << s.goals.size() << " goals, " << s.observers.size()
                    << " observers, T=" << s.trajectory_steps << ")\n";
        }
        catch (const dubious::Error& e)
        {
          std::cout << path << ": " << e.what() << "\n";
          ++failures;
        }
      }
      return failures == 0 ? 0 : 1;
    }
  }
  catch (const dubious::Error& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  catch (const std::exception& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
