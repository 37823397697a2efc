#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dubious/error.hpp"
#include "dubious/scenario.hpp"

namespace dubious
{

/// Schema or invariant violation in a scenario document; the message starts with the field path.
class ScenarioError : public InvalidArgument
{
public:
  ScenarioError(const std::string& path, const std::string& message)
      : InvalidArgument(path.empty() ? message : path + ": " + message), path_(path)
  {
  }

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

/// Parses and validates a JSON scenario document, filling defaults (uniform prior, temperature 1,
/// margin 0.05, 1000 iterations, farthest-goal decoy).
Scenario parse_scenario(std::string_view text);

Scenario load_scenario(const std::filesystem::path& path);

/// Pretty-printed JSON that parse_scenario maps back to an equal Scenario.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace dubious
