#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dubious/legibility.hpp"
#include "dubious/observers.hpp"
#include "support/oracle.hpp"

namespace testing_support
{

inline std::vector<oracle::P> to_oracle(const dubious::Trajectory& traj)
{
  std::vector<oracle::P> out;
  for (const auto& q : traj)
    out.push_back(oracle::to_p(q));
  return out;
}

inline std::vector<oracle::P> goal_points(const dubious::GoalSet& goals)
{
  std::vector<oracle::P> out;
  for (const auto& g : goals.goals())
    out.push_back(oracle::to_p(g.position));
  return out;
}

inline std::vector<bool> seen_by(const dubious::Trajectory& traj, const dubious::Observer& obs)
{
  std::vector<bool> out;
  for (const auto& q : traj)
    out.push_back(obs.sees(q));
  return out;
}

inline dubious::Trajectory from_oracle(const std::vector<oracle::P>& pts)
{
  std::vector<dubious::Point2> out;
  for (const auto& p : pts)
    out.push_back({p.x, p.y});
  return dubious::Trajectory(std::move(out));
}

inline dubious::ConvexPolygon box(double x0, double y0, double x1, double y1)
{
  return dubious::ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

inline std::filesystem::path source_path(const std::string& rel)
{
  return std::filesystem::path(DUBIOUS_SOURCE_DIR) / rel;
}

inline std::filesystem::path data_path(const std::string& rel)
{
  return std::filesystem::path(DUBIOUS_TEST_DATA_DIR) / rel;
}

inline const std::vector<std::string>& shipped_scenarios()
{
  static const std::vector<std::string> names = {
      "full_view",   "overoptimization", "positive_box", "negative_box",
      "mixed_triangles", "good_in_bad",  "bad_in_good"};
  return names;
}

}  // namespace testing_support
