// Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "dubious/baselines.hpp"
#include "dubious/export.hpp"
#include "dubious/metrics.hpp"
#include "dubious/run.hpp"
#include "dubious/scenario_io.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace dubious;
namespace ts = testing_support;

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome
{
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Outcome()>& check)
{
  const auto t0 = Clock::now();
  Outcome out;
  try
  {
    out = check();
  }
  catch (const std::exception& e)
  {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass)
    ++failures;
  std::printf("%s %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", name, out.detail.c_str(),
              seconds_since(t0));
  std::fflush(stdout);
}

std::string fmt(const char* pattern, double v)
{
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

Scenario shipped(const std::string& name)
{
  return load_scenario(ts::source_path("scenarios/" + name + ".json"));
}

// Every optimizer run made by the acceptance checks, for the contract criterion.
struct RecordedRun
{
  std::string label;
  Scenario scenario;
  OptimizationResult result;
};
std::vector<RecordedRun> recorded;

Trajectory planned(const Scenario& s, Strategy st, const std::string& label)
{
  auto out = plan(s, st);
  if (out.optimization)
    recorded.push_back({label, s, *out.optimization});
  return out.trajectory;
}

Outcome posterior_correctness()
{
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_real_distribution<double> b(0.05, 4.0);
  double worst_sum = 0.0;
  double worst_uniform = 0.0;
  for (int c = 0; c < 1000; ++c)
  {
    const int n = 2 + c % 4;
    std::vector<Goal> gs;
    for (int g = 0; g < n; ++g)
      gs.push_back({"g" + std::to_string(g), {u(rng), u(rng)}});
    const GoalSet goals(gs);
    const int T = 5 + c % 36;
    std::vector<Point2> pts{{u(rng), u(rng)}};
    std::normal_distribution<double> step(0.0, 0.6);
    for (int t = 1; t <= T; ++t)
      pts.push_back(pts.back() + Point2{step(rng), step(rng)});
    const int t = static_cast<int>(rng() % (T + 1));
    InferenceConfig cfg;
    cfg.temperature = b(rng);
    const auto post = goal_posterior(std::span<const Point2>(pts).first(t + 1), goals, T, cfg);
    double sum = 0.0;
    for (double p : post.probs)
      sum += p;
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    const auto start = goal_posterior(std::span<const Point2>(pts).first(1), goals, T, cfg);
    for (double p : start.probs)
      worst_uniform = std::max(worst_uniform, std::abs(p - 1.0 / n));
  }
  const double elapsed = seconds_since(t0);
  return {worst_sum <= 1e-9 && worst_uniform <= 1e-12 && elapsed < 5.0,
          "max |sum-1| " + fmt("%.2e", worst_sum) + ", max t=0 deviation " +
              fmt("%.2e", worst_uniform) + ", " + fmt("%.2f", elapsed) + "s of 5s"};
}

Outcome lattice_oracle()
{
  const auto t0 = Clock::now();
  const std::vector<std::vector<Goal>> goal_sets{
      {{"R", {4, 4}}, {"L", {0, 4}}},
      {{"R", {4, 4}}, {"L", {0, 4}}, {"D", {4, 0}}},
  };
  double worst = 0.0;
  std::size_t paths = 0;
  for (const auto& gs : goal_sets)
  {
    const GoalSet goals(gs);
    const auto gp = ts::goal_points(goals);
    const auto prior = oracle::uniform(gs.size());
    InferenceConfig cfg;
    for (int T = 1; T <= 6; ++T)
    {
      for (const auto& path : oracle::monotone_lattice(4, T))
      {
        const auto traj = ts::from_oracle(path);
        const std::vector<bool> all(path.size(), true);
        const double leg = legibility_score(traj, goals, "R", cfg);
        const double dec = illegibility_decoy_score(traj, goals, "L", cfg);
        const double amb = illegibility_ambiguous_score(traj, goals, "R", cfg);
        worst = std::max(worst, std::abs(leg - oracle::score(path, all, gp, prior, 1.0,
                                                             oracle::Score::Goal, 0)));
        worst = std::max(worst, std::abs(dec - oracle::score(path, all, gp, prior, 1.0,
                                                             oracle::Score::Goal, 1)));
        worst = std::max(worst, std::abs(amb - oracle::score(path, all, gp, prior, 1.0,
                                                             oracle::Score::Ambiguous, 0)));
        ++paths;
      }
    }
  }

  // Exhaustive optimum at T=6 for one full-view +1 observer and two goals.
  Scenario s;
  s.name = "lattice";
  s.bounds = {{0, 0}, {4, 4}};
  s.start = {0, 0};
  s.goals = GoalSet(goal_sets[0]);
  s.true_goal = "R";
  s.observers.emplace_back("all", 1.0, ConvexPolygon::from_bounds(s.bounds));
  s.trajectory_steps = 6;
  s.objective.decoy_goal = "L";
  s.stomp.iterations = 1000;
  s.stomp.noise_stddev = 0.3;
  s.stomp.seed = 1;
  const auto objective = s.make_objective();
  const auto gp = ts::goal_points(s.goals);
  double best_lattice = 0.0;
  std::vector<oracle::P> best_path;
  bool reduction_holds = true;
  for (const auto& path : oracle::monotone_lattice(4, 6))
  {
    const double cost = objective.total_cost(ts::from_oracle(path));
    // Independent route: minus the sum of the legibility partial sums.
    const auto ref = oracle::cost_vector(path, {{1.0, std::vector<bool>(7, true)}}, gp,
                                         oracle::uniform(2), 1.0, 0, 1, 1);
    double ref_total = 0.0;
    for (double c : ref)
      ref_total += c;
    reduction_holds &= std::abs(cost - ref_total) <= 1e-12;
    if (best_path.empty() || cost < best_lattice)
    {
      best_lattice = cost;
      best_path = path;
    }
  }
  const auto result = optimize(s, s.stomp);
  recorded.push_back({"lattice", s, result});
  const double limit = best_lattice + 0.05 * std::abs(best_lattice);
  const double elapsed = seconds_since(t0);
  const bool ok = worst <= 1e-12 && reduction_holds && result.best_total_cost <= limit &&
                  elapsed < 60.0;
  return {ok, std::to_string(paths) + " lattice paths, max score error " + fmt("%.2e", worst) +
                  ", cost reduction " + (reduction_holds ? "exact" : "BROKEN") +
                  "; lattice optimum " + fmt("%.6f", best_lattice) + ", optimizer " +
                  fmt("%.6f", result.best_total_cost) + " (limit " + fmt("%.6f", limit) + "), " +
                  fmt("%.1f", elapsed) + "s of 60s"};
}

Outcome motive_invariance()
{
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::uniform_real_distribution<double> m(-1.0, 1.0);
  const GoalSet goals({{"A", {1.5, 9}}, {"B", {5, 9}}, {"C", {8.5, 9}}});
  double worst = 0.0;
  std::size_t unseen_nonzero = 0;
  std::size_t unseen = 0;
  for (int c = 0; c < 100; ++c)
  {
    std::vector<double> motives;
    std::vector<ConvexPolygon> regions;
    const int count = 2 + c % 4;
    for (int k = 0; k < count; ++k)
    {
      double x0 = u(rng), x1 = u(rng), y0 = u(rng), y1 = u(rng);
      if (x0 > x1)
        std::swap(x0, x1);
      if (y0 > y1)
        std::swap(y0, y1);
      regions.push_back(ts::box(x0, y0, x1 + 0.5, y1 + 0.5));
      motives.push_back(k == 0 ? 1.0 : (k == 1 ? -1.0 : m(rng)));
    }
    auto make = [&](double scale, int alpha) {
      std::vector<Observer> obs;
      for (int k = 0; k < count; ++k)
        obs.emplace_back("o" + std::to_string(k), scale * motives[k], regions[k]);
      ObjectiveConfig cfg;
      cfg.alpha_neg = alpha;
      cfg.decoy_goal = "A";
      cfg.inference.temperature = 2.0;
      return Objective(obs, goals, "C", cfg);
    };
    std::normal_distribution<double> d(0.0, 1.0);
    auto line = efficient_trajectory({5, 1}, {8.5, 9}, 30);
    std::vector<Point2> pts(line.begin(), line.end());
    for (int t = 1; t < 30; ++t)
      pts[t] = clamp_to_bounds(pts[t] + Point2{d(rng), d(rng)}, {{0, 0}, {10, 10}});
    const Trajectory traj(pts);
    const int alpha = c % 2 ? 1 : -1;
    const auto obj = make(1.0, alpha);
    const auto base = obj.cost_vector(traj);
    for (double scale : {0.5, 0.9})
    {
      const auto scaled = make(scale, alpha).cost_vector(traj);
      for (std::size_t i = 0; i < base.size(); ++i)
        worst = std::max(worst, std::abs(scaled[i] - base[i]));
    }
    for (std::size_t i = 0; i < traj.size(); ++i)
    {
      bool seen = false;
      for (const auto& o : obj.observers())
        seen |= o.sees(traj[i]);
      if (!seen)
      {
        ++unseen;
        unseen_nonzero += base[i] != 0.0;
      }
    }
  }
  return {worst <= 1e-12 && unseen_nonzero == 0 && unseen > 0,
          "max scaled deviation " + fmt("%.2e", worst) + " over 100 scenes; " +
              std::to_string(unseen) + " invisible waypoints, " + std::to_string(unseen_nonzero) +
              " with non-zero cost"};
}

std::string pct(const std::optional<double>& v) { return v ? fmt("%.1f%%", *v) : "never"; }

Outcome box_orderings()
{
  const auto pos = shipped("positive_box");
  const auto& green = pos.observers.front();
  const auto ours = planned(pos, Strategy::DubiousDecoy, "positive_box dubious");
  const auto eff = efficient_trajectory(pos.start, pos.true_goal_position(), pos.trajectory_steps);
  const auto m_ours = observer_metrics(ours, green, pos);
  const auto m_eff = observer_metrics(eff, green, pos);
  const bool leg_ok = *m_ours.legibility > *m_eff.legibility;
  const bool early_ok = m_ours.earliest_correct_pct &&
                        (!m_eff.earliest_correct_pct ||
                         *m_ours.earliest_correct_pct <= *m_eff.earliest_correct_pct);

  const auto neg = shipped("negative_box");
  const auto& red = neg.observers.front();
  const auto decoy = planned(neg, Strategy::DubiousDecoy, "negative_box dubious");
  const auto maxd = planned(neg, Strategy::MaxDecoy, "negative_box max-decoy");
  const auto eff2 = efficient_trajectory(neg.start, neg.true_goal_position(), neg.trajectory_steps);
  const double d_ours = *observer_metrics(decoy, red, neg).illeg_decoy;
  const double d_max = *observer_metrics(maxd, red, neg).illeg_decoy;
  const double d_eff = *observer_metrics(eff2, red, neg).illeg_decoy;
  const bool decoy_ok = d_ours > d_max && d_max > d_eff;

  return {leg_ok && early_ok && decoy_ok,
          "legibility ours " + fmt("%.4f", *m_ours.legibility) + " vs efficient " +
              fmt("%.4f", *m_eff.legibility) + "; earliest ours " +
              pct(m_ours.earliest_correct_pct) + " vs efficient " +
              pct(m_eff.earliest_correct_pct) + "; illeg_decoy ours " + fmt("%.4f", d_ours) +
              " > max-decoy " + fmt("%.4f", d_max) + " > efficient " + fmt("%.4f", d_eff)};
}

Outcome hidden_observer_structure()
{
  const auto s = shipped("mixed_triangles");
  const auto traj = planned(s, Strategy::DubiousDecoy, "mixed_triangles dubious");
  const Observer* hidden = nullptr;
  for (const auto& o : s.observers)
    if (o.motive == -1.0)
      hidden = &o;
  if (!hidden)
    return {false, "scenario has no -1 observer"};
  std::size_t seen = 0;
  for (const auto& p : traj)
    seen += hidden->sees(p);
  const auto row = observer_metrics(traj, *hidden, s);
  const bool ok = seen == 0 && s.objective.inference.ambiguous_table_scaling &&
                  s.goals.size() == 3 && row.illeg_decoy && *row.illeg_decoy == 0.0 &&
                  row.illeg_ambiguous && std::abs(*row.illeg_ambiguous - 0.333) <= 5e-4;
  return {ok, "observer '" + hidden->id + "' sees " + std::to_string(seen) +
                  " waypoints; illeg_decoy " + fmt("%.17g", row.illeg_decoy.value_or(-1)) +
                  ", illeg_ambiguous " + fmt("%.6f", row.illeg_ambiguous.value_or(-1))};
}

Outcome metric_definitions()
{
  const GoalSet goals({{"A", {0, 0}}, {"B", {1, 0}}, {"C", {2, 0}}});
  const GoalPosterior flat{{1.0 / 3, 1.0 / 3, 1.0 / 3}};
  const GoalPosterior good{{0.1, 0.1, 0.8}};
  const GoalPosterior bad{{0.8, 0.1, 0.1}};
  BeliefTrace b;
  for (int t = 0; t <= 40; ++t)
  {
    b.posteriors.push_back(t >= 10 ? good : flat);
    b.visible.push_back(true);
  }
  const auto e = earliest_correct(b, goals, "C", 0.05);
  const bool example_ok = e && *e == 25.0;

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> pick(0, 2);
  int coupled = 0;
  int nevers = 0;
  for (int c = 0; c < 200; ++c)
  {
    BeliefTrace r;
    const int T = 5 + c % 40;
    for (int t = 0; t <= T; ++t)
    {
      int k = pick(rng);
      if (c % 3 == 0 && k == 1)
        k = 2;
      r.posteriors.push_back(k == 0 ? flat : (k == 1 ? good : bad));
      r.visible.push_back(true);
    }
    const auto ec = earliest_correct(r, goals, "C", 0.05);
    const auto pc = pct_correct_after_first(r, goals, "C", 0.05);
    nevers += !ec;
    coupled += ec.has_value() == pc.has_value();
  }
  return {example_ok && coupled == 200 && nevers > 0,
          "first correct at t=10 of 40 -> " + pct(e) + "; never/n-a coupled on " +
              std::to_string(coupled) + "/200 traces (" + std::to_string(nevers) + " never)"};
}

Outcome optimizer_contracts()
{
  // Determinism: the same scenario twice serially and once with parallel evaluation.
  auto s = shipped("good_in_bad");
  s.stomp.iterations = 300;
  auto par = s.stomp;
  par.threads = 4;
  const auto a = optimize(s, s.stomp);
  const auto b = optimize(s, s.stomp);
  const auto c = optimize(s, par);
  recorded.push_back({"good_in_bad serial", s, a});
  recorded.push_back({"good_in_bad parallel", s, c});
  const bool identical = a.best_trajectory == b.best_trajectory &&
                         a.best_trajectory == c.best_trajectory &&
                         a.cost_history == b.cost_history && a.cost_history == c.cost_history &&
                         format_trajectory_csv(a.best_trajectory) ==
                             format_trajectory_csv(c.best_trajectory);

  for (const auto& name : ts::shipped_scenarios())
  {
    auto sc = shipped(name);
    sc.stomp.iterations = 100;
    sc.stomp.record_every = 25;
    recorded.push_back({name + " smoke", sc, plan(sc, Strategy::DubiousDecoy).optimization.value()});
  }

  std::size_t histories_bad = 0;
  std::size_t pin_bad = 0;
  std::size_t trajectories = 0;
  for (const auto& run : recorded)
  {
    for (std::size_t k = 1; k < run.result.cost_history.size(); ++k)
      if (run.result.cost_history[k] > run.result.cost_history[k - 1])
      {
        ++histories_bad;
        break;
      }
    const Point2 goal = run.scenario.true_goal_position();
    auto check = [&](const Trajectory& t) {
      ++trajectories;
      pin_bad += !(t.front() == run.scenario.start && t.back() == goal);
    };
    check(run.result.best_trajectory);
    for (const auto& snap : run.result.snapshots)
      check(snap.trajectory);
  }
  return {identical && histories_bad == 0 && pin_bad == 0,
          std::to_string(recorded.size()) + " runs, " + std::to_string(histories_bad) +
              " with increasing history; " + std::to_string(trajectories) + " trajectories, " +
              std::to_string(pin_bad) + " unpinned; serial/serial/4-thread runs " +
              (identical ? "bit-identical" : "DIFFER")};
}

Outcome overoptimization()
{
  auto s = shipped("overoptimization");
  s.stomp.record_every = 20;
  const auto out = plan(s, Strategy::DubiousDecoy);
  recorded.push_back({"overoptimization", s, *out.optimization});
  std::vector<double> lengths;
  std::string detail;
  for (int it : {80, 480, 700, 1000})
  {
    bool found = false;
    for (const auto& snap : out.optimization->snapshots)
    {
      if (snap.iteration == it)
      {
        lengths.push_back(path_length(snap.trajectory.points()));
        found = true;
      }
    }
    if (!found)
      return {false, "missing snapshot at iteration " + std::to_string(it)};
    detail += (detail.empty() ? "" : ", ") + std::to_string(it) + ": " + fmt("%.4f", lengths.back());
  }
  bool ok = true;
  for (std::size_t k = 1; k < lengths.size(); ++k)
    ok &= lengths[k] >= lengths[k - 1];
  return {ok, "path length " + detail};
}

Outcome io_stability()
{
  std::size_t round_trips = 0;
  for (const auto& name : ts::shipped_scenarios())
  {
    const auto s = shipped(name);
    if (!(parse_scenario(serialize_scenario(s)) == s))
      return {false, "round-trip mismatch for " + name};
    ++round_trips;
  }
  // Regenerate the golden artifacts exactly as the unit tests do and compare bytes.
  const auto s = shipped("positive_box");
  const auto straight = efficient_trajectory(s.start, s.true_goal_position(), s.trajectory_steps);
  std::vector<Point2> pts(straight.begin(), straight.end());
  for (int t = 1; t < s.trajectory_steps; ++t)
    pts[t] = pts[t] + Point2{1.5 * std::sin(std::numbers::pi * t / s.trajectory_steps), 0.0};
  const Trajectory arc(pts);
  const std::vector<LabeledTrajectory> trajs{{"efficient", straight}, {"arc", arc}};
  const auto belief = belief_trace(arc, s.observers.front(), s.goals, s.objective.inference);
  const std::vector<std::pair<std::string, std::string>> golden{
      {"positive_box_metrics.csv", format_metrics_table(build_report(s, trajs))},
      {"positive_box_scene.svg", render_scene_svg(s, trajs)},
      {"positive_box_belief.svg", render_belief_svg(belief, s.goals, "green")},
  };
  std::size_t stable = 0;
  std::string broken;
  for (const auto& [file, text] : golden)
  {
    const bool same = read_text_file(ts::data_path(file)) == text;
    stable += same;
    if (!same)
      broken += " " + file;
  }
  return {stable == golden.size(),
          std::to_string(round_trips) + " scenarios round-trip; " + std::to_string(stable) + "/" +
              std::to_string(golden.size()) + " golden files byte-stable" + broken};
}

}  // namespace

int main()
{
  report("posterior-correctness", posterior_correctness);
  report("lattice-oracle-equivalence", lattice_oracle);
  report("motive-scale-invariance", motive_invariance);
  report("ordering-positive-and-negative-box", box_orderings);
  report("hidden-negative-observer-structure", hidden_observer_structure);
  report("metric-definitions", metric_definitions);
  report("overoptimization-path-length", overoptimization);
  report("optimizer-contracts", optimizer_contracts);
  report("io-round-trip-and-golden", io_stability);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
