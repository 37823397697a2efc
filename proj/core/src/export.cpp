#include "dubious/export.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dubious/error.hpp"

namespace dubious
{

namespace
{

std::string fmt(const char* pattern, double value)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

std::string exact(double value) { return fmt("%.17g", value); }

std::string optional_cell(const std::optional<double>& value, const char* pattern)
{
  return value ? fmt(pattern, *value) : std::string("---");
}

std::string xml_escape(std::string_view text)
{
  std::string out;
  for (char c : text)
  {
    switch (c)
    {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#9467bd", "#8c564b",
                                                 "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

/// Maps workspace coordinates onto an SVG canvas with y pointing up.
struct Canvas
{
  Bounds bounds;
  double width;
  double height;
  double pad;

  double sx(double x) const
  {
    return pad + (x - bounds.min.x) / (bounds.max.x - bounds.min.x) * (width - 2 * pad);
  }
  double sy(double y) const
  {
    return height - pad - (y - bounds.min.y) / (bounds.max.y - bounds.min.y) * (height - 2 * pad);
  }
  std::string xy(Point2 p) const { return fmt("%.2f", sx(p.x)) + "," + fmt("%.2f", sy(p.y)); }
};

double parse_double(std::string_view field, std::size_t line)
{
  double value = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw Error("trajectory csv line " + std::to_string(line) + ": bad number '" +
                std::string(field) + "'");
  return value;
}

}  // namespace

std::string format_trajectory_csv(const Trajectory& traj)
{
  std::string out = "t,x,y\n";
  for (std::size_t t = 0; t < traj.size(); ++t)
    out += std::to_string(t) + "," + exact(traj[t].x) + "," + exact(traj[t].y) + "\n";
  return out;
}

Trajectory parse_trajectory_csv(std::string_view text)
{
  std::vector<Point2> points;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size())
  {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (line.empty())
      continue;
    if (line_no == 1)
    {
      if (line != "t,x,y")
        throw Error("trajectory csv: expected header 't,x,y'");
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos)
      throw Error("trajectory csv line " + std::to_string(line_no) + ": expected t,x,y");
    const double t = parse_double(line.substr(0, c1), line_no);
    if (t != static_cast<double>(points.size()))
      throw Error("trajectory csv line " + std::to_string(line_no) + ": timesteps out of order");
    points.push_back({parse_double(line.substr(c1 + 1, c2 - c1 - 1), line_no),
                      parse_double(line.substr(c2 + 1), line_no)});
  }
  return Trajectory(std::move(points));
}

Trajectory load_trajectory_csv(const std::filesystem::path& path)
{
  return parse_trajectory_csv(read_text_file(path));
}

std::string format_belief_csv(const BeliefTrace& belief, const GoalSet& goals)
{
  std::string out = "t,goal,probability,visible\n";
  for (std::size_t t = 0; t < belief.size(); ++t)
  {
    for (std::size_t g = 0; g < goals.size(); ++g)
    {
      out += std::to_string(t) + "," + goals[g].id + "," + exact(belief.posteriors[t][g]) + "," +
             (belief.visible[t] ? "1" : "0") + "\n";
    }
  }
  return out;
}

std::string format_cost_history_csv(const std::vector<double>& history)
{
  std::string out = "iteration,best_total_cost\n";
  for (std::size_t k = 0; k < history.size(); ++k)
    out += std::to_string(k) + "," + exact(history[k]) + "\n";
  return out;
}

std::string format_snapshots_csv(const std::vector<Snapshot>& snapshots)
{
  std::string out = "iteration,t,x,y\n";
  for (const auto& snap : snapshots)
  {
    for (std::size_t t = 0; t < snap.trajectory.size(); ++t)
    {
      out += std::to_string(snap.iteration) + "," + std::to_string(t) + "," +
             exact(snap.trajectory[t].x) + "," + exact(snap.trajectory[t].y) + "\n";
    }
  }
  return out;
}

std::string format_metrics_table(const std::vector<MetricsReport>& reports)
{
  std::string out =
      "trajectory,observer,motive,Earliest,% Correct,Legibility,Illeg-Decoy,Illeg-Ambiguous\n";
  for (const auto& report : reports)
  {
    for (const auto& row : report.observers)
    {
      out += report.label + "," + row.observer_id + "," + fmt("%g", row.motive) + "," +
             optional_cell(row.earliest_correct_pct, "%.1f%%") + "," +
             optional_cell(row.pct_correct_after_first, "%.1f%%") + "," +
             optional_cell(row.legibility, "%.4f") + "," + optional_cell(row.illeg_decoy, "%.4f") +
             "," + optional_cell(row.illeg_ambiguous, "%.4f") + "\n";
    }
  }
  return out;
}

std::string render_scene_svg(const Scenario& scenario,
                             const std::vector<LabeledTrajectory>& trajectories)
{
  const double span_x = scenario.bounds.max.x - scenario.bounds.min.x;
  const double span_y = scenario.bounds.max.y - scenario.bounds.min.y;
  const double width = 640.0;
  const double height = std::max(160.0, width * span_y / span_x);
  const Canvas c{scenario.bounds, width, height, 20.0};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt("%.0f", width)
      << "\" height=\"" << fmt("%.0f", height + 24.0 * trajectories.size()) << "\">\n";
  svg << "<title>" << xml_escape(scenario.name) << "</title>\n";
  svg << "<rect x=\"" << fmt("%.2f", c.sx(scenario.bounds.min.x)) << "\" y=\""
      << fmt("%.2f", c.sy(scenario.bounds.max.y)) << "\" width=\""
      << fmt("%.2f", c.sx(scenario.bounds.max.x) - c.sx(scenario.bounds.min.x)) << "\" height=\""
      << fmt("%.2f", c.sy(scenario.bounds.min.y) - c.sy(scenario.bounds.max.y))
      << "\" fill=\"white\" stroke=\"black\"/>\n";

  for (const auto& obs : scenario.observers)
  {
    const char* colour = obs.is_positive() ? "#2ca02c" : "#d62728";
    const double opacity = 0.1 + 0.4 * std::abs(obs.motive);
    svg << "<polygon points=\"";
    for (std::size_t i = 0; i < obs.region.vertices().size(); ++i)
      svg << (i ? " " : "") << c.xy(obs.region.vertices()[i]);
    svg << "\" fill=\"" << colour << "\" fill-opacity=\"" << fmt("%.3f", opacity)
        << "\" stroke=\"" << colour << "\"><title>" << xml_escape(obs.id) << " (motive "
        << fmt("%g", obs.motive) << ")</title></polygon>\n";
  }

  for (std::size_t k = 0; k < trajectories.size(); ++k)
  {
    const char* colour = kPalette[k % kPalette.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    const auto& traj = trajectories[k].trajectory;
    for (std::size_t t = 0; t < traj.size(); ++t)
      svg << (t ? " " : "") << c.xy(traj[t]);
    svg << "\"/>\n";
    const double ly = height + 16.0 + 24.0 * k;
    svg << "<line x1=\"20\" y1=\"" << fmt("%.0f", ly - 4) << "\" x2=\"44\" y2=\""
        << fmt("%.0f", ly - 4) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"50\" y=\"" << fmt("%.0f", ly) << "\" font-size=\"12\">"
        << xml_escape(trajectories[k].label) << "</text>\n";
  }

  for (const auto& g : scenario.goals.goals())
  {
    const bool is_true = g.id == scenario.true_goal;
    const bool is_decoy = scenario.objective.decoy_goal && g.id == *scenario.objective.decoy_goal;
    svg << "<circle cx=\"" << fmt("%.2f", c.sx(g.position.x)) << "\" cy=\""
        << fmt("%.2f", c.sy(g.position.y)) << "\" r=\"7\" fill=\""
        << (is_true ? "#ffd700" : "#ffffff") << "\" stroke=\"black\""
        << (is_decoy ? " stroke-dasharray=\"3,2\"" : "") << "/>\n";
    svg << "<text x=\"" << fmt("%.2f", c.sx(g.position.x) + 9) << "\" y=\""
        << fmt("%.2f", c.sy(g.position.y) - 9) << "\" font-size=\"12\">" << xml_escape(g.id)
        << "</text>\n";
  }
  svg << "<rect x=\"" << fmt("%.2f", c.sx(scenario.start.x) - 6) << "\" y=\""
      << fmt("%.2f", c.sy(scenario.start.y) - 6)
      << "\" width=\"12\" height=\"12\" fill=\"black\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string render_belief_svg(const BeliefTrace& belief, const GoalSet& goals,
                              const std::string& title)
{
  if (belief.size() == 0)
    throw InvalidArgument("render_belief_svg needs a non-empty trace");
  const double width = 640.0;
  const double height = 320.0;
  const double steps = static_cast<double>(std::max<std::size_t>(belief.size() - 1, 1));
  const Canvas c{{{0.0, 0.0}, {steps, 1.0}}, width, height, 30.0};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt("%.0f", width)
      << "\" height=\"" << fmt("%.0f", height + 20.0 * goals.size()) << "\">\n";
  svg << "<title>" << xml_escape(title) << "</title>\n";

  const double cell = c.sx(1.0) - c.sx(0.0);
  for (std::size_t t = 0; t < belief.size(); ++t)
  {
    if (!belief.visible[t])
      continue;
    svg << "<rect x=\"" << fmt("%.2f", c.sx(static_cast<double>(t)) - cell / 2) << "\" y=\""
        << fmt("%.2f", c.sy(1.0)) << "\" width=\"" << fmt("%.2f", cell) << "\" height=\""
        << fmt("%.2f", c.sy(0.0) - c.sy(1.0)) << "\" fill=\"#cccccc\" fill-opacity=\"0.5\"/>\n";
  }
  svg << "<rect x=\"" << fmt("%.2f", c.sx(0.0)) << "\" y=\"" << fmt("%.2f", c.sy(1.0))
      << "\" width=\"" << fmt("%.2f", c.sx(steps) - c.sx(0.0)) << "\" height=\""
      << fmt("%.2f", c.sy(0.0) - c.sy(1.0)) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (std::size_t g = 0; g < goals.size(); ++g)
  {
    const char* colour = kPalette[g % kPalette.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    for (std::size_t t = 0; t < belief.size(); ++t)
      svg << (t ? " " : "") << c.xy({static_cast<double>(t), belief.posteriors[t][g]});
    svg << "\"/>\n";
    const double ly = height + 14.0 + 20.0 * g;
    svg << "<line x1=\"30\" y1=\"" << fmt("%.0f", ly - 4) << "\" x2=\"54\" y2=\""
        << fmt("%.0f", ly - 4) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"60\" y=\"" << fmt("%.0f", ly) << "\" font-size=\"12\">P("
        << xml_escape(goals[g].id) << ")</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error("cannot write '" + path.string() + "'");
  out << contents;
  if (!out)
    throw Error("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace dubious
