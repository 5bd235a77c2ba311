// debate-lab: runs builtin or config-defined debate scenarios and writes
// result tables.
//
//   debate-lab list
//   debate-lab run --scenario <name> [--config <path>] [--seed <u64>]
//                  [--out <path>] [--format csv|jsonl] [--timing]
//   debate-lab play --config <path> [--seed <u64>] [--count <n>]
//                   [--answers lo|hi|midpoint] [--out <path>] [--format csv|jsonl]
//
// Exit codes: 0 success, 2 config error, 3 solver error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "debate/errors.hpp"
#include "debate/scenario.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kSolverError = 3;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw debate::ConfigError("", "cannot open config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw debate::ConfigError("", std::string("invalid JSON: ") + e.what());
  }
}

// Writes to the file if one is given, else stdout. The whole table is
// rendered first so a failed run leaves no partial file.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw debate::ConfigError("out", "cannot write '" + out_path + "'");
  out << text;
}

debate::OutputFormat parse_format(const std::string& s) {
  return s == "jsonl" ? debate::OutputFormat::jsonl : debate::OutputFormat::csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feature-debate scenario runner"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List builtin scenarios");

  std::string scenario, config_path, out_path, format = "csv";
  std::uint64_t seed = 1;
  bool seed_given = false;
  bool timing = false;
  auto* run = app.add_subcommand("run", "Run a scenario and write its result rows");
  run->add_option("--scenario", scenario, "Builtin name, or the label for --config rows")->required();
  run->add_option("--config", config_path, "JSON scenario config");
  auto* seed_opt = run->add_option("--seed", seed, "Base seed (default 1, or the config's)");
  run->add_option("--out", out_path, "Output file (default stdout)");
  run->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  run->add_flag("--timing", timing, "Record wall-clock runtime_ms (breaks byte-identical reruns)");

  std::string play_config, play_out, play_format = "csv", answers = "lo";
  std::uint64_t play_seed = 1;
  std::size_t count = 1;
  auto* play = app.add_subcommand("play", "Play seeded debates and write transcripts");
  play->add_option("--config", play_config, "JSON config in feature mode")->required();
  play->add_option("--seed", play_seed, "Seed of the first debate; later ones add 1");
  play->add_option("--count", count, "Number of debates")->check(CLI::Range(1, 100000));
  play->add_option("--answers", answers, "Answer policy")->check(CLI::IsMember({"lo", "hi", "midpoint"}));
  play->add_option("--out", play_out, "Output file (default stdout)");
  play->add_option("--format", play_format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }
  seed_given = seed_opt->count() > 0;

  try {
    if (*list) {
      for (const auto& s : debate::list_scenarios()) {
        std::cout << s.name << '\t' << s.description << '\n';
      }
      return 0;
    }

    std::ostringstream text;
    if (*run) {
      std::vector<debate::ResultRow> rows;
      if (!config_path.empty()) {
        auto config = debate::parse_scenario_config(load_json(config_path), scenario);
        if (seed_given) config.seed = seed;
        config.timing = timing;
        rows = debate::run_scenario(config);
      } else if (debate::is_builtin(scenario)) {
        rows = debate::run_builtin(scenario, seed, timing);
      } else {
        throw debate::ConfigError("scenario", "unknown scenario '" + scenario +
                                                  "' (see `debate-lab list`) and no --config given");
      }
      debate::write_rows(text, rows, parse_format(format));
      emit(text.str(), out_path);
      return 0;
    }

    if (*play) {
      const auto config = debate::parse_scenario_config(load_json(play_config), "play");
      if (config.mode != debate::ScenarioMode::feature) {
        throw debate::ConfigError("mode", "play needs a feature-mode config");
      }
      const debate::DebateSetup setup{*config.prior, *config.question, config.rounds.front(),
                                      config.pass_allowed, config.extra_indices};
      const auto policy = answers == "hi"         ? debate::AnswerPolicy::optimal_hi()
                          : answers == "midpoint" ? debate::AnswerPolicy::midpoint()
                                                  : debate::AnswerPolicy::optimal_lo();
      const bool csv = parse_format(play_format) == debate::OutputFormat::csv;
      if (csv) text << debate::transcript_csv_header() << '\n';
      for (std::size_t k = 0; k < count; ++k) {
        const auto t = debate::play_debate(setup, policy, play_seed + k);
        text << (csv ? debate::to_csv(t) : debate::to_json(t)) << '\n';
      }
      emit(text.str(), play_out);
      return 0;
    }
  } catch (const debate::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolverError;
  }
  return 0;
}
