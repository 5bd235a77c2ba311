#pragma once

// Scenario runner behind the debate-lab CLI: a config names a debate family
// and a sweep, and each (N, world) pair becomes one ResultRow.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "debate/engine.hpp"
#include "debate/independent_evidence.hpp"
#include "debate/question.hpp"
#include "debate/world.hpp"

namespace debate {

struct ResultRow {
  std::string scenario;
  int rounds = 0;
  std::string world_id;
  double f_true = 0.0;
  double value_up_down = 0.0;
  double value_down_up = 0.0;
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  double error_worst = 0.0;
  std::optional<double> error_expected;
  std::optional<double> last_mover_advantage;
  std::optional<int> side_changes;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
};

enum class ScenarioMode { feature, independent_evidence, info_limited };

struct WorldSelection {
  enum class Kind { all, explicit_list, sample };
  Kind kind = Kind::all;
  std::vector<World> worlds;  // explicit_list
  std::size_t count = 0;      // sample
  std::optional<std::uint64_t> seed;  // sample; defaults to the scenario seed
};

struct ScenarioConfig {
  std::string name;
  ScenarioMode mode = ScenarioMode::feature;
  std::optional<Prior> prior;        // feature mode
  std::optional<Question> question;  // feature and info_limited modes
  std::vector<int> rounds{1};
  WorldSelection worlds;
  bool pass_allowed = true;
  std::vector<FeatureIndex> extra_indices;
  AnswerSelection answer_selection = AnswerSelection::worst_in_lambda;
  std::optional<evidence::EvidenceModel> evidence;  // independent_evidence mode
  int bits = 4;                      // info_limited
  std::size_t dims = 4;              // info_limited; question defaults to WeightedLinear(dims)
  std::optional<double> lipschitz;   // info_limited; reported in world ids when set
  std::string world_prefix;          // prepended to every world_id
  std::uint64_t seed = 1;
  bool timing = false;               // off: runtime_ms is written as 0
};

// Builds a config from JSON. Keys: "mode" ("feature" default,
// "independent_evidence", "info_limited"), "prior", "question", "rounds"
// (int or list), "worlds" ("all" | {"explicit": [[..], ..]} |
// {"sample": n, "seed": s}), "pass_allowed", "extra_indices",
// "answer_selection" ("worst" | "midpoint"), "evidence", "bits", "dims",
// "lipschitz_L", "seed". Throws ConfigError with the field path.
ScenarioConfig parse_scenario_config(const nlohmann::json& j, const std::string& name);

// Rows in sweep order: rounds outermost, then worlds. Worlds are solved in
// parallel; the result does not depend on the thread count.
std::vector<ResultRow> run_scenario(const ScenarioConfig& config);

struct ScenarioInfo {
  std::string name;
  std::string description;
};

std::vector<ScenarioInfo> list_scenarios();
bool is_builtin(const std::string& name);
// Throws std::invalid_argument for an unknown name.
std::vector<ResultRow> run_builtin(const std::string& name, std::uint64_t seed, bool timing = false);

// Exactly "scenario,N,world_id,...,seed".
std::string csv_header();
std::string to_csv(const ResultRow& row);
std::string to_json(const ResultRow& row);

enum class OutputFormat { csv, jsonl };
void write_rows(std::ostream& out, const std::vector<ResultRow>& rows, OutputFormat format);

// Flat transcript records, same conventions as result rows.
std::string transcript_csv_header();
std::string to_csv(const Transcript& transcript);
std::string to_json(const Transcript& transcript);

// Compact world label: a bit string for Boolean worlds, otherwise values
// joined by ':'.
std::string world_label(const World& world);

}  // namespace debate
