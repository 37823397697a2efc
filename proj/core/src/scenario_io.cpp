#include "dubious/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "scenario_json.hpp"

namespace dubious
{

namespace
{

using nlohmann::json;

std::string child(const std::string& path, const std::string& key)
{
  return path.empty() ? key : path + "." + key;
}

std::string element(const std::string& path, std::size_t i)
{
  return path + "[" + std::to_string(i) + "]";
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed)
{
  if (!obj.is_object())
    throw ScenarioError(path, "expected an object");
  const std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
  {
    if (!known.count(key))
      throw ScenarioError(child(path, key), "unknown field");
  }
}

const json& require(const json& obj, const std::string& path, const char* key)
{
  const auto it = obj.find(key);
  if (it == obj.end())
    throw ScenarioError(child(path, key), "missing required field");
  return *it;
}

double as_number(const json& value, const std::string& path)
{
  if (!value.is_number())
    throw ScenarioError(path, "expected a number");
  return value.get<double>();
}

int as_int(const json& value, const std::string& path)
{
  if (!value.is_number_integer())
    throw ScenarioError(path, "expected an integer");
  return value.get<int>();
}

std::string as_string(const json& value, const std::string& path)
{
  if (!value.is_string())
    throw ScenarioError(path, "expected a string");
  return value.get<std::string>();
}

bool as_bool(const json& value, const std::string& path)
{
  if (!value.is_boolean())
    throw ScenarioError(path, "expected a boolean");
  return value.get<bool>();
}

Point2 as_point(const json& value, const std::string& path)
{
  if (!value.is_array() || value.size() != 2)
    throw ScenarioError(path, "expected a point [x, y]");
  const Point2 p{as_number(value[0], element(path, 0)), as_number(value[1], element(path, 1))};
  if (!is_finite(p))
    throw ScenarioError(path, "point must be finite");
  return p;
}

template <typename Fn>
auto at_path(const std::string& path, Fn&& fn)
{
  try
  {
    return fn();
  }
  catch (const ScenarioError&)
  {
    throw;
  }
  catch (const InvalidArgument& e)
  {
    throw ScenarioError(path, e.what());
  }
}

json point_json(Point2 p) { return json::array({p.x, p.y}); }

GoalSet parse_goals(const json& value, const std::string& path)
{
  if (!value.is_array() || value.empty())
    throw ScenarioError(path, "expected a non-empty array of goals");
  std::vector<Goal> goals;
  std::vector<double> prior;
  std::size_t with_prior = 0;
  for (std::size_t i = 0; i < value.size(); ++i)
  {
    const auto p = element(path, i);
    check_keys(value[i], p, {"id", "position", "prior"});
    goals.push_back({as_string(require(value[i], p, "id"), child(p, "id")),
                     as_point(require(value[i], p, "position"), child(p, "position"))});
    if (value[i].contains("prior"))
    {
      prior.push_back(as_number(value[i]["prior"], child(p, "prior")));
      ++with_prior;
    }
  }
  if (with_prior != 0 && with_prior != goals.size())
    throw ScenarioError(path, "prior must be given for every goal or for none");
  return at_path(path, [&] {
    return with_prior == 0 ? GoalSet(std::move(goals)) : GoalSet(std::move(goals), std::move(prior));
  });
}

Observer parse_observer(const json& value, const std::string& path)
{
  check_keys(value, path, {"id", "motive", "region"});
  const auto id = as_string(require(value, path, "id"), child(path, "id"));
  const double motive = as_number(require(value, path, "motive"), child(path, "motive"));
  const auto& region = require(value, path, "region");
  const auto region_path = child(path, "region");
  if (!region.is_array())
    throw ScenarioError(region_path, "expected an array of vertices");
  std::vector<Point2> vertices;
  for (std::size_t i = 0; i < region.size(); ++i)
    vertices.push_back(as_point(region[i], element(region_path, i)));
  ConvexPolygon polygon = at_path(region_path, [&] { return ConvexPolygon(std::move(vertices)); });
  return at_path(child(path, "motive"), [&] { return Observer(id, motive, std::move(polygon)); });
}

void parse_objective(const json& value, const std::string& path, ObjectiveConfig& cfg)
{
  check_keys(value, path, {"alpha_neg", "temperature", "margin", "ambiguous_table_scaling"});
  if (value.contains("alpha_neg"))
    cfg.alpha_neg = as_int(value["alpha_neg"], child(path, "alpha_neg"));
  if (cfg.alpha_neg != 1 && cfg.alpha_neg != -1)
    throw ScenarioError(child(path, "alpha_neg"), "must be -1 or +1");
  if (value.contains("temperature"))
    cfg.inference.temperature = as_number(value["temperature"], child(path, "temperature"));
  if (value.contains("margin"))
    cfg.inference.margin = as_number(value["margin"], child(path, "margin"));
  if (value.contains("ambiguous_table_scaling"))
    cfg.inference.ambiguous_table_scaling =
        as_bool(value["ambiguous_table_scaling"], child(path, "ambiguous_table_scaling"));
  at_path(path, [&] {
    cfg.inference.validate();
    return 0;
  });
}

void parse_stomp(const json& value, const std::string& path, StompConfig& cfg)
{
  check_keys(value, path,
             {"iterations", "rollouts_per_iter", "noise_stddev", "sensitivity", "seed",
              "record_every", "threads"});
  if (value.contains("iterations"))
    cfg.iterations = as_int(value["iterations"], child(path, "iterations"));
  if (value.contains("rollouts_per_iter"))
    cfg.rollouts_per_iter = as_int(value["rollouts_per_iter"], child(path, "rollouts_per_iter"));
  if (value.contains("noise_stddev"))
    cfg.noise_stddev = as_number(value["noise_stddev"], child(path, "noise_stddev"));
  if (value.contains("sensitivity"))
    cfg.sensitivity = as_number(value["sensitivity"], child(path, "sensitivity"));
  if (value.contains("seed"))
  {
    const auto& seed = value["seed"];
    if (!seed.is_number_unsigned())
      throw ScenarioError(child(path, "seed"), "expected a non-negative integer");
    cfg.seed = seed.get<std::uint64_t>();
  }
  if (value.contains("record_every"))
    cfg.record_every = as_int(value["record_every"], child(path, "record_every"));
  if (value.contains("threads"))
    cfg.threads = as_int(value["threads"], child(path, "threads"));
  at_path(path, [&] {
    cfg.validate();
    return 0;
  });
}

}  // namespace

Scenario scenario_from_json(const json& doc)
{
  check_keys(doc, "",
             {"schema_version", "name", "description", "bounds", "start", "goals", "true_goal",
              "decoy_goal", "observers", "trajectory_steps", "objective", "stomp"});

  const int version = as_int(require(doc, "", "schema_version"), "schema_version");
  if (version != kScenarioSchemaVersion)
    throw ScenarioError("schema_version",
                        "unsupported version " + std::to_string(version) + " (expected " +
                            std::to_string(kScenarioSchemaVersion) + ")");

  Scenario s;
  if (doc.contains("name"))
    s.name = as_string(doc["name"], "name");
  if (doc.contains("description"))
    s.description = as_string(doc["description"], "description");

  const auto& bounds = require(doc, "", "bounds");
  check_keys(bounds, "bounds", {"min", "max"});
  s.bounds = {as_point(require(bounds, "bounds", "min"), "bounds.min"),
              as_point(require(bounds, "bounds", "max"), "bounds.max")};
  at_path("bounds", [&] {
    s.bounds.validate();
    return 0;
  });

  s.start = as_point(require(doc, "", "start"), "start");
  if (!point_in_bounds(s.start, s.bounds))
    throw ScenarioError("start", "lies outside bounds");

  s.goals = parse_goals(require(doc, "", "goals"), "goals");
  for (std::size_t i = 0; i < s.goals.size(); ++i)
  {
    if (!point_in_bounds(s.goals[i].position, s.bounds))
      throw ScenarioError(element("goals", i) + ".position", "lies outside bounds");
  }

  s.true_goal = as_string(require(doc, "", "true_goal"), "true_goal");
  if (!s.goals.contains(s.true_goal))
    throw ScenarioError("true_goal", "true_goal not in goals");

  if (doc.contains("decoy_goal") && !doc["decoy_goal"].is_null())
  {
    const auto decoy = as_string(doc["decoy_goal"], "decoy_goal");
    if (decoy == s.true_goal)
      throw ScenarioError("decoy_goal", "decoy_goal equals true_goal ('" + decoy + "')");
    if (!s.goals.contains(decoy))
      throw ScenarioError("decoy_goal", "decoy_goal not in goals");
    s.objective.decoy_goal = decoy;
  }
  else
  {
    s.objective.decoy_goal = farthest_goal(s.goals, s.true_goal);
  }

  if (doc.contains("observers"))
  {
    const auto& observers = doc["observers"];
    if (!observers.is_array())
      throw ScenarioError("observers", "expected an array");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < observers.size(); ++i)
    {
      const auto p = element("observers", i);
      auto obs = parse_observer(observers[i], p);
      if (!ids.insert(obs.id).second)
        throw ScenarioError(child(p, "id"), "duplicate observer id '" + obs.id + "'");
      if (!intersects(obs.region, s.bounds))
        throw ScenarioError(child(p, "region"), "region does not intersect bounds");
      s.observers.push_back(std::move(obs));
    }
  }

  s.trajectory_steps = as_int(require(doc, "", "trajectory_steps"), "trajectory_steps");
  if (s.trajectory_steps < 2)
    throw ScenarioError("trajectory_steps", "must be at least 2");

  if (doc.contains("objective"))
    parse_objective(doc["objective"], "objective", s.objective);
  if (doc.contains("stomp"))
    parse_stomp(doc["stomp"], "stomp", s.stomp);

  at_path("", [&] {
    s.validate();
    return 0;
  });
  return s;
}

json scenario_to_json(const Scenario& s)
{
  json doc;
  doc["schema_version"] = kScenarioSchemaVersion;
  doc["name"] = s.name;
  if (!s.description.empty())
    doc["description"] = s.description;
  doc["bounds"] = {{"min", point_json(s.bounds.min)}, {"max", point_json(s.bounds.max)}};
  doc["start"] = point_json(s.start);

  const bool uniform = s.goals.prior() == GoalSet(s.goals.goals()).prior();
  json goals = json::array();
  for (std::size_t i = 0; i < s.goals.size(); ++i)
  {
    json g = {{"id", s.goals[i].id}, {"position", point_json(s.goals[i].position)}};
    if (!uniform)
      g["prior"] = s.goals.prior()[i];
    goals.push_back(std::move(g));
  }
  doc["goals"] = std::move(goals);
  doc["true_goal"] = s.true_goal;
  if (s.objective.decoy_goal)
    doc["decoy_goal"] = *s.objective.decoy_goal;

  json observers = json::array();
  for (const auto& o : s.observers)
  {
    json region = json::array();
    for (const auto& v : o.region.vertices())
      region.push_back(point_json(v));
    observers.push_back({{"id", o.id}, {"motive", o.motive}, {"region", std::move(region)}});
  }
  doc["observers"] = std::move(observers);
  doc["trajectory_steps"] = s.trajectory_steps;

  doc["objective"] = {{"alpha_neg", s.objective.alpha_neg},
                      {"temperature", s.objective.inference.temperature},
                      {"margin", s.objective.inference.margin},
                      {"ambiguous_table_scaling", s.objective.inference.ambiguous_table_scaling}};
  doc["stomp"] = {{"iterations", s.stomp.iterations},
                  {"rollouts_per_iter", s.stomp.rollouts_per_iter},
                  {"noise_stddev", s.stomp.noise_stddev},
                  {"sensitivity", s.stomp.sensitivity},
                  {"seed", s.stomp.seed},
                  {"record_every", s.stomp.record_every},
                  {"threads", s.stomp.threads}};
  return doc;
}

Scenario parse_scenario(std::string_view text)
{
  json doc;
  try
  {
    doc = json::parse(text.begin(), text.end());
  }
  catch (const json::parse_error& e)
  {
    throw ScenarioError("", std::string("malformed document: ") + e.what());
  }
  return scenario_from_json(doc);
}

Scenario load_scenario(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& scenario)
{
  return scenario_to_json(scenario).dump(2) + "\n";
}

}  // namespace dubious
