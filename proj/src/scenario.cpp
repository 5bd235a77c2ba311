#include "debate/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "debate/config.hpp"
#include "debate/detail/parallel.hpp"
#include "debate/errors.hpp"
#include "debate/info_limited.hpp"
#include "debate/random.hpp"

namespace debate {

namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kMaxRounds = 6;        // 2N <= 12
constexpr std::size_t kMaxLegal = 12;

std::string number(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Config parsing

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

int positive_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw ConfigError(path, "expected a positive integer");
  }
  return j.get<int>();
}

std::uint64_t seed_value(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ConfigError(path, "expected a non-negative integer seed");
  }
  return j.get<std::uint64_t>();
}

std::vector<int> parse_rounds(const Json& j) {
  std::vector<int> out;
  if (j.is_array()) {
    if (j.empty()) throw ConfigError("rounds", "sweep must not be empty");
    for (std::size_t k = 0; k < j.size(); ++k) {
      out.push_back(positive_int(j[k], "rounds[" + std::to_string(k) + "]"));
    }
  } else {
    out.push_back(positive_int(j, "rounds"));
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] > kMaxRounds) {
      throw ConfigError("rounds[" + std::to_string(k) + "]",
                        "at most " + std::to_string(kMaxRounds) + " rounds (2N <= 12)");
    }
  }
  return out;
}

WorldSelection parse_worlds(const Json& j) {
  WorldSelection sel;
  if (j.is_string()) {
    if (j.get<std::string>() != "all") throw ConfigError("worlds", "expected \"all\"");
    return sel;
  }
  if (!j.is_object()) throw ConfigError("worlds", "expected \"all\" or an object");
  if (const auto* list = optional_field(j, "explicit")) {
    if (!list->is_array() || list->empty()) {
      throw ConfigError("worlds.explicit", "expected a non-empty array of worlds");
    }
    sel.kind = WorldSelection::Kind::explicit_list;
    for (std::size_t k = 0; k < list->size(); ++k) {
      const auto path = "worlds.explicit[" + std::to_string(k) + "]";
      const auto& w = (*list)[k];
      if (!w.is_array()) throw ConfigError(path, "expected an array of numbers");
      std::vector<double> values;
      for (const auto& v : w) {
        if (!v.is_number()) throw ConfigError(path, "expected an array of numbers");
        values.push_back(v.get<double>());
      }
      try {
        sel.worlds.emplace_back(std::move(values));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(path, e.what());
      }
    }
    return sel;
  }
  if (const auto* n = optional_field(j, "sample")) {
    sel.kind = WorldSelection::Kind::sample;
    sel.count = static_cast<std::size_t>(positive_int(*n, "worlds.sample"));
    if (const auto* s = optional_field(j, "seed")) sel.seed = seed_value(*s, "worlds.seed");
    return sel;
  }
  throw ConfigError("worlds", "expected \"explicit\" or \"sample\"");
}

bool parse_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ConfigError(path, "expected true or false");
  return j.get<bool>();
}

// ---------------------------------------------------------------------------
// Row production

std::vector<World> select_worlds(const ScenarioConfig& config, const Prior& prior,
                                 const Question& question, std::vector<double>* masses) {
  switch (config.worlds.kind) {
    case WorldSelection::Kind::all: {
      std::vector<World> out;
      for (auto& atom : support_worlds(prior, question)) {
        out.push_back(std::move(atom.world));
        if (masses) masses->push_back(atom.probability);
      }
      return out;
    }
    case WorldSelection::Kind::explicit_list:
      for (std::size_t k = 0; k < config.worlds.worlds.size(); ++k) {
        const auto& w = config.worlds.worlds[k];
        if (w.dimension() != prior.dimension() || !prior.supports(w)) {
          throw ConfigError("worlds.explicit[" + std::to_string(k) + "]",
                            "world " + w.to_string() + " is not in the prior's support");
        }
      }
      return config.worlds.worlds;
    case WorldSelection::Kind::sample: {
      Rng rng(config.worlds.seed.value_or(config.seed));
      std::vector<World> out;
      for (std::size_t k = 0; k < config.worlds.count; ++k) out.push_back(sample_world(prior, rng()));
      return out;
    }
  }
  return {};
}

std::vector<ResultRow> run_feature(const ScenarioConfig& config, const Prior& prior,
                                   const Question& question) {
  std::vector<double> masses;
  const auto worlds = select_worlds(config, prior, question, &masses);
  const bool exact = config.worlds.kind == WorldSelection::Kind::all;

  std::vector<ResultRow> rows;
  for (int rounds : config.rounds) {
    const DebateSetup setup{prior, question, rounds, config.pass_allowed, config.extra_indices};
    std::vector<ResultRow> block(worlds.size());
    std::vector<double> selected(worlds.size());
    detail::parallel_for(worlds.size(), [&](std::size_t k) {
      const auto start = Clock::now();
      const auto a = analyze_world(setup, worlds[k]);
      auto& row = block[k];
      row.scenario = config.name;
      row.rounds = rounds;
      row.world_id = config.world_prefix + world_label(worlds[k]);
      row.f_true = a.truth;
      row.value_up_down = a.solved.value_up_down;
      row.value_down_up = a.solved.value_down_up;
      row.lambda_lo = a.lambda.lo();
      row.lambda_hi = a.lambda.hi();
      row.error_worst = a.worst_case_error;
      row.last_mover_advantage = a.last_mover_advantage;
      row.side_changes = a.oscillation.side_changes;
      row.seed = config.seed;
      if (config.timing) row.runtime_ms = elapsed_ms(start);
      selected[k] = config.answer_selection == AnswerSelection::worst_in_lambda
                        ? a.worst_case_error
                        : std::abs(a.lambda.midpoint() - a.truth);
    });

    double expected = 0.0;
    if (exact) {
      for (std::size_t k = 0; k < worlds.size(); ++k) expected += masses[k] * selected[k];
    } else {
      expected = expected_error(setup, config.answer_selection);
    }
    for (auto& row : block) {
      row.error_expected = expected;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<World> grid_worlds(const ScenarioConfig& config) {
  const std::size_t side = std::size_t{1} << config.bits;
  std::vector<World> out;
  switch (config.worlds.kind) {
    case WorldSelection::Kind::all: {
      std::size_t total = 1;
      for (std::size_t i = 0; i < config.dims; ++i) {
        total *= side;
        if (total > 4096) throw ConfigError("worlds", "full grid exceeds 4096 worlds; sample instead");
      }
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<double> values(config.dims);
        std::size_t rest = idx;
        for (std::size_t i = config.dims; i-- > 0;) {
          values[i] = bits::grid_point(rest % side, config.bits);
          rest /= side;
        }
        out.emplace_back(std::move(values));
      }
      return out;
    }
    case WorldSelection::Kind::explicit_list:
      for (std::size_t k = 0; k < config.worlds.worlds.size(); ++k) {
        if (config.worlds.worlds[k].dimension() != config.dims) {
          throw ConfigError("worlds.explicit[" + std::to_string(k) + "]",
                            "expected " + std::to_string(config.dims) + " features");
        }
      }
      return config.worlds.worlds;
    case WorldSelection::Kind::sample: {
      Rng rng(config.worlds.seed.value_or(config.seed));
      for (std::size_t k = 0; k < config.worlds.count; ++k) {
        std::vector<double> values(config.dims);
        for (auto& v : values) v = bits::grid_point(uniform_index(rng, side), config.bits);
        out.emplace_back(std::move(values));
      }
      return out;
    }
  }
  return out;
}

std::vector<ResultRow> run_info_limited(const ScenarioConfig& config) {
  if (config.bits < 1 || config.bits > 16) throw ConfigError("bits", "must be in [1, 16]");
  if (config.dims < 1 || config.dims > 8) throw ConfigError("dims", "must be in [1, 8]");
  const Question question = config.question ? *config.question : questions::weighted_linear(config.dims);
  if (question.min_dimension() > config.dims) {
    throw ConfigError("question", "reads features beyond dims");
  }
  const auto worlds = grid_worlds(config);

  std::vector<ResultRow> rows;
  for (int rounds : config.rounds) {
    std::vector<ResultRow> block(worlds.size());
    detail::parallel_for(worlds.size(), [&](std::size_t k) {
      const auto start = Clock::now();
      const bits::BitDebateSpec spec{question, worlds[k], rounds, config.bits, config.pass_allowed};
      const auto solved = bits::solve_bit_debate(spec);
      auto& row = block[k];
      row.scenario = config.name;
      row.rounds = rounds;
      row.world_id = config.world_prefix + world_label(worlds[k]);
      if (config.lipschitz) {
        row.world_id += ";bound=" + number(bits::lipschitz_error_bound(*config.lipschitz, rounds));
      }
      row.f_true = evaluate(question, worlds[k]);
      row.value_up_down = solved.value_up_down;
      row.value_down_up = solved.value_down_up;
      row.lambda_lo = solved.lo();
      row.lambda_hi = solved.hi();
      row.error_worst = truth_promotion_bound(solved, row.f_true);
      row.last_mover_advantage = last_mover_advantage(solved, solved.lo(), solved.hi());
      row.seed = config.seed;
      if (config.timing) row.runtime_ms = elapsed_ms(start);
    });
    for (auto& row : block) rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Builtins

using Builtin = std::function<std::vector<ResultRow>(std::uint64_t seed, bool timing)>;

struct BuiltinEntry {
  ScenarioInfo info;
  Builtin run;
};

ScenarioConfig base_config(const std::string& name, std::uint64_t seed, bool timing) {
  ScenarioConfig c;
  c.name = name;
  c.seed = seed;
  c.timing = timing;
  return c;
}

World ones(std::size_t dims) { return World(std::vector<double>(dims, 1.0)); }

std::vector<FeatureIndex> all_indices(std::size_t dims) {
  std::vector<FeatureIndex> out;
  for (std::size_t i = 0; i < dims; ++i) out.emplace_back(i);
  return out;
}

void append(std::vector<ResultRow>& rows, std::vector<ResultRow> more) {
  for (auto& r : more) rows.push_back(std::move(r));
}

std::vector<ResultRow> prop1(std::uint64_t seed, bool timing) {
  constexpr int kQuestionsPerN = 100;
  Rng rng(seed);
  std::vector<ResultRow> rows;
  int id = 0;
  for (int n = 1; n <= 4; ++n) {
    const std::size_t dims = n + 1;
    for (int q = 0; q < kQuestionsPerN; ++q, ++id) {
      const std::size_t k = 1 + uniform_index(rng, n);
      std::vector<std::size_t> pool(dims);
      for (std::size_t i = 0; i < dims; ++i) pool[i] = i;
      std::vector<std::size_t> features;
      for (std::size_t j = 0; j < k; ++j) {
        const auto pick = uniform_index(rng, pool.size());
        features.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      std::sort(features.begin(), features.end());
      questions::TableRows table;
      for (std::size_t key = 0; key < (std::size_t{1} << k); ++key) {
        std::vector<double> bits_key(k);
        for (std::size_t j = 0; j < k; ++j) bits_key[j] = static_cast<double>((key >> (k - 1 - j)) & 1);
        table[bits_key] = static_cast<double>(uniform_index(rng, 65)) / 64.0;
      }
      auto c = base_config("prop1", seed, timing);
      c.prior = Prior::uniform_boolean(dims);
      c.question = questions::table(features, std::move(table), "table" + std::to_string(id));
      c.rounds = {n};
      c.extra_indices = all_indices(dims);
      c.world_prefix = "q" + std::to_string(id) + ":";
      append(rows, run_scenario(c));
    }
  }
  return rows;
}

std::vector<ResultRow> prop2_worst(std::uint64_t seed, bool timing) {
  std::vector<ResultRow> rows;
  for (double delta : {0.2, 0.1, 0.05, 0.01, 0.001}) {
    for (int n = 1; n <= 4; ++n) {
      auto c = base_config("prop2-worst", seed, timing);
      c.prior = Prior::bernoulli(n + 1, delta);
      c.question = questions::conjunction(n + 1);
      c.rounds = {n};
      c.worlds.kind = WorldSelection::Kind::explicit_list;
      c.worlds.worlds = {ones(n + 1)};
      c.world_prefix = "delta=" + number(delta) + ";";
      append(rows, run_scenario(c));
    }
  }
  return rows;
}

std::vector<ResultRow> prop2_expected(std::uint64_t seed, bool timing) {
  std::vector<ResultRow> rows;
  for (int n = 1; n <= 4; ++n) {
    auto c = base_config("prop2-expected", seed, timing);
    c.prior = Prior::uniform_boolean(n + 1);
    c.question = questions::parity(n + 1);
    c.rounds = {n};
    append(rows, run_scenario(c));
  }
  return rows;
}

std::vector<ResultRow> unfair_conjunction(std::uint64_t seed, bool timing) {
  std::vector<ResultRow> rows;
  for (std::size_t k = 2; k <= 4; ++k) {
    auto c = base_config("unfair-conjunction", seed, timing);
    c.prior = Prior::uniform_boolean(k);
    c.question = questions::conjunction(k);
    c.rounds.clear();
    for (int n = 1; n <= static_cast<int>(k); ++n) c.rounds.push_back(n);
    c.worlds.kind = WorldSelection::Kind::explicit_list;
    c.worlds.worlds = {ones(k)};
    c.world_prefix = "K=" + std::to_string(k) + ";";
    append(rows, run_scenario(c));
  }
  return rows;
}

std::vector<ResultRow> unstable_xor(std::uint64_t seed, bool timing) {
  std::vector<ResultRow> rows;
  for (std::size_t k = 2; k <= 4; ++k) {
    auto c = base_config("unstable-xor", seed, timing);
    c.prior = Prior::uniform_boolean(k);
    c.question = questions::parity(k);
    c.rounds.clear();
    for (int n = 1; n <= static_cast<int>(k); ++n) c.rounds.push_back(n);
    c.world_prefix = "K=" + std::to_string(k) + ";";
    append(rows, run_scenario(c));
  }
  return rows;
}

std::vector<ResultRow> oscillation(std::uint64_t seed, bool timing) {
  std::vector<ResultRow> rows;
  for (int n = 1; n <= 3; ++n) {
    const std::size_t dims = 2 * n;
    auto c = base_config("oscillation", seed, timing);
    c.prior = Prior::bernoulli(dims, 0.05);
    c.question = questions::parity(dims);
    c.rounds = {n};
    c.worlds.kind = WorldSelection::Kind::explicit_list;
    c.worlds.worlds = {ones(dims)};
    append(rows, run_scenario(c));
  }
  return rows;
}

std::vector<ResultRow> stalling(std::uint64_t seed, bool timing) {
  const auto base = questions::conjunction(1);
  const std::vector<std::pair<std::string, Question>> variants{
      {"base", base},
      {"stall", questions::stall_wrapped(base, {{1, 2}})},
      {"chain", questions::chain_stall(base, 1, {2, 3})},
  };
  std::vector<ResultRow> rows;
  for (const auto& [label, question] : variants) {
    auto c = base_config("stalling", seed, timing);
    c.prior = Prior::uniform_boolean(4);
    c.question = question;
    c.rounds = {1, 2, 3, 4};
    c.worlds.kind = WorldSelection::Kind::explicit_list;
    c.worlds.worlds = {ones(4)};
    c.world_prefix = label + ":";
    append(rows, run_scenario(c));
  }
  return rows;
}

evidence::EvidenceModel random_model(Rng& rng, std::size_t dims) {
  std::vector<evidence::EvidenceFeature> features;
  for (std::size_t j = 0; j < dims; ++j) {
    const std::size_t arity = 2 + uniform_index(rng, 2);
    evidence::EvidenceFeature f;
    for (std::size_t v = 0; v < arity; ++v) f.values.push_back(static_cast<double>(v) / (arity - 1));
    for (auto* table : {&f.p_given_x1, &f.p_given_x0}) {
      double total = 0.0;
      for (std::size_t v = 0; v < arity; ++v) {
        table->push_back(0.05 + unit_double(rng));
        total += table->back();
      }
      for (auto& p : *table) p /= total;
    }
    features.push_back(std::move(f));
  }
  return evidence::EvidenceModel(0.1 + 0.8 * unit_double(rng), std::move(features));
}

std::vector<ResultRow> indep_evidence(std::uint64_t seed, bool timing) {
  Rng rng(seed);
  std::vector<ResultRow> rows;
  for (int m = 0; m < 20; ++m) {
    const std::size_t dims = 2 + uniform_index(rng, 3);
    auto c = base_config("indep-evidence", seed, timing);
    c.mode = ScenarioMode::independent_evidence;
    c.evidence = random_model(rng, dims);
    c.rounds = {1, 2, 3};
    c.worlds.kind = WorldSelection::Kind::sample;
    c.worlds.count = 3;
    c.worlds.seed = rng();
    c.world_prefix = "m" + std::to_string(m) + ":";
    append(rows, run_scenario(c));
  }
  return rows;
}

std::vector<ResultRow> early_stop(std::uint64_t seed, bool timing) {
  constexpr int kDebates = 200;
  struct Case {
    evidence::EvidenceModel model;
    World world;
    int rounds;
    double a1, a2;
  };
  Rng rng(seed);
  std::vector<Case> cases;
  for (int k = 0; k < kDebates; ++k) {
    const std::size_t dims = 2 + uniform_index(rng, 4);
    auto model = random_model(rng, dims);
    const int rounds = 1 + static_cast<int>(uniform_index(rng, 2));
    auto world = sample_world(evidence::induced_prior(model), rng());
    const double a1 = unit_double(rng);
    const double a2 = unit_double(rng);
    cases.push_back({std::move(model), std::move(world), rounds, a1, a2});
  }

  std::vector<ResultRow> rows(cases.size());
  detail::parallel_for(cases.size(), [&](std::size_t k) {
    const auto start = Clock::now();
    const auto& c = cases[k];
    int stop_round = -1;
    evidence::Winner stopped = evidence::Winner::tie;
    for (int r = 0; r <= c.rounds; ++r) {
      const auto d = evidence::early_stop_check(c.model, c.world, c.rounds, r, c.a1, c.a2);
      if (d.stop) {
        stop_round = r;
        stopped = d.winner;
        break;
      }
    }
    const auto full = evidence::full_debate_winner(c.model, c.world, c.rounds, c.a1, c.a2);
    const auto spec = make_spec(evidence::induced_prior(c.model), evidence::induced_question(c.model),
                                c.world, c.rounds);
    const auto solved = solve(spec);
    auto& row = rows[k];
    row.scenario = "early-stop";
    row.rounds = c.rounds;
    row.world_id = "d" + std::to_string(k) + ":" + world_label(c.world) + ";a=" + number(c.a1) +
                   "/" + number(c.a2) + ";stop=" + std::to_string(stop_round) +
                   ";agree=" + (stopped == full ? "1" : "0");
    row.f_true = evidence::true_answer(c.model, c.world);
    row.value_up_down = solved.value_up_down;
    row.value_down_up = solved.value_down_up;
    row.lambda_lo = solved.lo();
    row.lambda_hi = solved.hi();
    row.error_worst = truth_promotion_bound(solved, row.f_true);
    row.last_mover_advantage = last_mover_advantage(solved, solved.lo(), solved.hi());
    row.seed = seed;
    if (timing) row.runtime_ms = elapsed_ms(start);
  });
  return rows;
}

std::vector<ResultRow> info_limited(std::uint64_t seed, bool timing) {
  auto c = base_config("info-limited", seed, timing);
  c.mode = ScenarioMode::info_limited;
  c.dims = 4;
  c.bits = 4;
  c.lipschitz = 1.0;
  c.rounds = {1, 3, 4, 6};
  c.worlds.kind = WorldSelection::Kind::sample;
  c.worlds.count = 20;
  return run_scenario(c);
}

const std::vector<BuiltinEntry>& builtins() {
  static const std::vector<BuiltinEntry> table{
      {{"prop1", "random table questions on <= N of N+1 uniform Boolean features; every error_worst is 0"},
       prop1},
      {{"prop2-worst", "Conjunction(N+1) under Bernoulli(delta), all-ones world, delta sweep; error 1 - delta"},
       prop2_worst},
      {{"prop2-expected", "Xor(N+1) under the uniform prior; Lambda = {1/2}, expected error 1/2"},
       prop2_expected},
      {{"unfair-conjunction", "Conjunction(K), uniform prior, all-ones world; honest side needs N >= K"},
       unfair_conjunction},
      {{"unstable-xor", "Xor(K), uniform prior, all worlds; belief stays at 1/2 until N >= K"},
       unstable_xor},
      {{"oscillation", "Xor(2N) under Bernoulli(0.05), all-ones world; each revealed one flips the belief across 1/2"},
       oscillation},
      {{"stalling", "Conjunction(1) plain, with one stall gate, and with a two-fix chain; N = 1..4"},
       stalling},
      {{"indep-evidence", "random independent-evidence models; both orders reach the optimal answer"},
       indep_evidence},
      {{"early-stop", "random independent-evidence debates; stop round and agreement with full play"},
       early_stop},
      {{"info-limited", "bit debates on WeightedLinear(4), B = 4, N in {1,3,4,6}, 20 grid worlds"},
       info_limited},
  };
  return table;
}

}  // namespace

std::string world_label(const World& world) {
  bool boolean = true;
  for (double v : world.values()) boolean = boolean && (v == 0.0 || v == 1.0);
  std::string out;
  for (std::size_t i = 0; i < world.dimension(); ++i) {
    if (boolean) {
      out += world[i] == 1.0 ? '1' : '0';
    } else {
      if (i) out += ':';
      out += number(world[i]);
    }
  }
  return out;
}

ScenarioConfig parse_scenario_config(const Json& j, const std::string& name) {
  if (!j.is_object()) throw ConfigError("", "config must be a JSON object");
  ScenarioConfig c;
  c.name = name;

  if (const auto* mode = optional_field(j, "mode")) {
    const auto m = mode->is_string() ? mode->get<std::string>() : "";
    if (m == "feature") {
      c.mode = ScenarioMode::feature;
    } else if (m == "independent_evidence") {
      c.mode = ScenarioMode::independent_evidence;
    } else if (m == "info_limited") {
      c.mode = ScenarioMode::info_limited;
    } else {
      throw ConfigError("mode", "expected feature, independent_evidence or info_limited");
    }
  }
  if (const auto* s = optional_field(j, "seed")) c.seed = seed_value(*s, "seed");
  if (const auto* r = optional_field(j, "rounds")) c.rounds = parse_rounds(*r);
  if (const auto* w = optional_field(j, "worlds")) c.worlds = parse_worlds(*w);
  if (const auto* p = optional_field(j, "pass_allowed")) c.pass_allowed = parse_bool(*p, "pass_allowed");
  if (const auto* a = optional_field(j, "answer_selection")) {
    const auto s = a->is_string() ? a->get<std::string>() : "";
    if (s == "worst") {
      c.answer_selection = AnswerSelection::worst_in_lambda;
    } else if (s == "midpoint") {
      c.answer_selection = AnswerSelection::midpoint_of_lambda;
    } else {
      throw ConfigError("answer_selection", "expected \"worst\" or \"midpoint\"");
    }
  }
  if (const auto* q = optional_field(j, "question")) c.question = config::parse_question(*q);

  switch (c.mode) {
    case ScenarioMode::feature: {
      const auto* p = optional_field(j, "prior");
      if (!p) throw ConfigError("prior", "missing field");
      if (!c.question) throw ConfigError("question", "missing field");
      c.prior = config::parse_prior(*p);
      if (c.question->min_dimension() > c.prior->dimension()) {
        throw ConfigError("question", "reads features beyond the prior's dimension");
      }
      std::set<std::size_t> legal(c.question->relevant_features().begin(),
                                  c.question->relevant_features().end());
      if (const auto* extra = optional_field(j, "extra_indices")) {
        if (!extra->is_array()) throw ConfigError("extra_indices", "expected an array");
        for (std::size_t k = 0; k < extra->size(); ++k) {
          const auto path = "extra_indices[" + std::to_string(k) + "]";
          const auto& e = (*extra)[k];
          if (!e.is_number_integer() || e.get<long long>() < 0 ||
              e.get<std::size_t>() >= c.prior->dimension()) {
            throw ConfigError(path, "expected a feature index below the prior's dimension");
          }
          c.extra_indices.emplace_back(e.get<std::size_t>());
          legal.insert(e.get<std::size_t>());
        }
      }
      if (legal.size() > kMaxLegal) {
        throw ConfigError("extra_indices", "at most " + std::to_string(kMaxLegal) + " legal features");
      }
      break;
    }
    case ScenarioMode::independent_evidence: {
      const auto* e = optional_field(j, "evidence");
      if (!e) throw ConfigError("evidence", "missing field");
      c.evidence = config::parse_evidence_model(*e);
      if (c.evidence->dimension() > kMaxLegal) {
        throw ConfigError("evidence.features", "at most " + std::to_string(kMaxLegal) + " features");
      }
      break;
    }
    case ScenarioMode::info_limited: {
      if (const auto* b = optional_field(j, "bits")) c.bits = positive_int(*b, "bits");
      if (const auto* d = optional_field(j, "dims")) c.dims = static_cast<std::size_t>(positive_int(*d, "dims"));
      if (const auto* l = optional_field(j, "lipschitz_L")) {
        if (!l->is_number() || l->get<double>() < 0.0) {
          throw ConfigError("lipschitz_L", "expected a non-negative number");
        }
        c.lipschitz = l->get<double>();
      }
      if (c.bits > 16) throw ConfigError("bits", "must be in [1, 16]");
      if (c.dims > 8) throw ConfigError("dims", "must be in [1, 8]");
      if (c.worlds.kind == WorldSelection::Kind::all && !optional_field(j, "worlds")) {
        c.worlds.kind = WorldSelection::Kind::sample;
        c.worlds.count = 20;
      }
      break;
    }
  }
  return c;
}

std::vector<ResultRow> run_scenario(const ScenarioConfig& config) {
  if (config.rounds.empty()) throw ConfigError("rounds", "sweep must not be empty");
  switch (config.mode) {
    case ScenarioMode::feature:
      if (!config.prior) throw ConfigError("prior", "missing field");
      if (!config.question) throw ConfigError("question", "missing field");
      return run_feature(config, *config.prior, *config.question);
    case ScenarioMode::independent_evidence:
      if (!config.evidence) throw ConfigError("evidence", "missing field");
      return run_feature(config, evidence::induced_prior(*config.evidence),
                         evidence::induced_question(*config.evidence));
    case ScenarioMode::info_limited:
      return run_info_limited(config);
  }
  return {};
}

std::vector<ScenarioInfo> list_scenarios() {
  std::vector<ScenarioInfo> out;
  for (const auto& entry : builtins()) out.push_back(entry.info);
  return out;
}

bool is_builtin(const std::string& name) {
  const auto& table = builtins();
  return std::any_of(table.begin(), table.end(), [&](const auto& e) { return e.info.name == name; });
}

std::vector<ResultRow> run_builtin(const std::string& name, std::uint64_t seed, bool timing) {
  for (const auto& entry : builtins()) {
    if (entry.info.name == name) return entry.run(seed, timing);
  }
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::string csv_header() {
  return "scenario,N,world_id,f_true,value_up_down,value_down_up,lambda_lo,lambda_hi,"
         "error_worst,error_expected,last_mover_advantage,side_changes,runtime_ms,seed";
}

std::string to_csv(const ResultRow& r) {
  std::string out = csv_field(r.scenario);
  out += ',' + std::to_string(r.rounds);
  out += ',' + csv_field(r.world_id);
  for (double v : {r.f_true, r.value_up_down, r.value_down_up, r.lambda_lo, r.lambda_hi, r.error_worst}) {
    out += ',' + number(v);
  }
  out += ',' + (r.error_expected ? number(*r.error_expected) : "");
  out += ',' + (r.last_mover_advantage ? number(*r.last_mover_advantage) : "");
  out += ',' + (r.side_changes ? std::to_string(*r.side_changes) : "");
  out += ',' + number(r.runtime_ms);
  out += ',' + std::to_string(r.seed);
  return out;
}

namespace {

// Numbers go through the same %.12g text as CSV so both formats agree.
Json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  return Json::parse(number(v));
}

template <typename T>
Json json_optional(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, double>) {
    return json_number(*v);
  } else {
    return *v;
  }
}

}  // namespace

std::string to_json(const ResultRow& r) {
  Json j = Json::object();
  j["scenario"] = r.scenario;
  j["N"] = r.rounds;
  j["world_id"] = r.world_id;
  j["f_true"] = json_number(r.f_true);
  j["value_up_down"] = json_number(r.value_up_down);
  j["value_down_up"] = json_number(r.value_down_up);
  j["lambda_lo"] = json_number(r.lambda_lo);
  j["lambda_hi"] = json_number(r.lambda_hi);
  j["error_worst"] = json_number(r.error_worst);
  j["error_expected"] = json_optional(r.error_expected);
  j["last_mover_advantage"] = json_optional(r.last_mover_advantage);
  j["side_changes"] = json_optional(r.side_changes);
  j["runtime_ms"] = json_number(r.runtime_ms);
  j["seed"] = r.seed;
  // nlohmann sorts object keys; keep the column order instead.
  std::string out = "{";
  bool first = true;
  for (const char* key : {"scenario", "N", "world_id", "f_true", "value_up_down", "value_down_up",
                          "lambda_lo", "lambda_hi", "error_worst", "error_expected",
                          "last_mover_advantage", "side_changes", "runtime_ms", "seed"}) {
    if (!first) out += ',';
    first = false;
    out += Json(key).dump() + ':' + j[key].dump();
  }
  return out + "}";
}

void write_rows(std::ostream& out, const std::vector<ResultRow>& rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    out << csv_header() << '\n';
    for (const auto& r : rows) out << to_csv(r) << '\n';
  } else {
    for (const auto& r : rows) out << to_json(r) << '\n';
  }
}

namespace {

std::string line_text(const std::vector<FeatureIndex>& line) {
  std::string out;
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (k) out += ' ';
    out += line[k].to_string();
  }
  return out;
}

int player_number(Player p) { return static_cast<int>(p); }

}  // namespace

std::string transcript_csv_header() {
  return "question,world,truth,a1,a2,first_mover,arguments,final_belief,u1,u2,winner,"
         "coin_tie_break,outcome,error,experiment,experiment_result,seed";
}

std::string to_csv(const Transcript& t) {
  std::string out = csv_field(t.question);
  out += ',' + csv_field(world_label(t.world));
  for (double v : {t.truth, t.a1, t.a2}) out += ',' + number(v);
  out += ',' + std::to_string(player_number(t.first_mover));
  out += ',' + csv_field(line_text(t.arguments));
  for (double v : {t.final_belief, t.u1, t.u2}) out += ',' + number(v);
  out += ',' + std::to_string(player_number(t.winner));
  out += std::string(",") + (t.coin_tie_break ? "1" : "0");
  for (double v : {t.outcome, t.error}) out += ',' + number(v);
  out += ',' + t.experiment.to_string();
  out += ',' + number(t.experiment_result);
  out += ',' + std::to_string(t.seed);
  return out;
}

std::string to_json(const Transcript& t) {
  std::string out = "{";
  auto add = [&](const char* key, const Json& value) {
    if (out.size() > 1) out += ',';
    out += Json(key).dump() + ':' + value.dump();
  };
  add("question", t.question);
  add("world", world_label(t.world));
  add("truth", json_number(t.truth));
  add("a1", json_number(t.a1));
  add("a2", json_number(t.a2));
  add("first_mover", player_number(t.first_mover));
  Json args = Json::array();
  for (auto a : t.arguments) args.push_back(a.to_string());
  add("arguments", args);
  add("final_belief", json_number(t.final_belief));
  add("u1", json_number(t.u1));
  add("u2", json_number(t.u2));
  add("winner", player_number(t.winner));
  add("coin_tie_break", t.coin_tie_break);
  add("outcome", json_number(t.outcome));
  add("error", json_number(t.error));
  add("experiment", t.experiment.to_string());
  add("experiment_result", json_number(t.experiment_result));
  add("seed", t.seed);
  return out + "}";
}

}  // namespace debate
