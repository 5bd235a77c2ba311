#include "debate/config.hpp"

#include <stdexcept>

#include "debate/errors.hpp"

namespace debate::config {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(path + "." + key, "missing field");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

std::size_t count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ConfigError(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<double> numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(number(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::vector<std::size_t> indices(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(count(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

// Runs a constructor, turning its std::invalid_argument into a ConfigError.
template <typename Fn>
auto build(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

}  // namespace

Prior parse_prior(const Json& j, const std::string& path) {
  const auto& kind_json = field(j, "kind", path);
  if (!kind_json.is_string()) throw ConfigError(path + ".kind", "expected a string");
  const auto kind = kind_json.get<std::string>();

  if (kind == "explicit") {
    const auto& atoms_json = field(j, "atoms", path);
    if (!atoms_json.is_array()) throw ConfigError(path + ".atoms", "expected an array");
    std::vector<WeightedWorld> atoms;
    for (std::size_t k = 0; k < atoms_json.size(); ++k) {
      const auto p = path + ".atoms[" + std::to_string(k) + "]";
      auto values = numbers(field(atoms_json[k], "world", p), p + ".world");
      const double mass = number(field(atoms_json[k], "p", p), p + ".p");
      atoms.push_back({build(p + ".world", [&] { return World(std::move(values)); }), mass});
    }
    return build(path + ".atoms", [&] { return Prior::explicit_support(std::move(atoms)); });
  }
  if (kind == "product") {
    const auto& features_json = field(j, "features", path);
    if (!features_json.is_array()) throw ConfigError(path + ".features", "expected an array");
    std::vector<FeatureDistribution> features;
    for (std::size_t k = 0; k < features_json.size(); ++k) {
      const auto p = path + ".features[" + std::to_string(k) + "]";
      features.push_back({numbers(field(features_json[k], "values", p), p + ".values"),
                          numbers(field(features_json[k], "probs", p), p + ".probs")});
    }
    return build(path + ".features", [&] { return Prior::product(std::move(features)); });
  }
  if (kind == "bernoulli") {
    const auto dims = count(field(j, "dims", path), path + ".dims");
    const double p = number(field(j, "p", path), path + ".p");
    if (dims == 0) throw ConfigError(path + ".dims", "must be positive");
    return build(path, [&] { return Prior::bernoulli(dims, p); });
  }
  throw ConfigError(path + ".kind", "unknown prior kind '" + kind + "'");
}

Question parse_question(const Json& j, const std::string& path) {
  const auto& family_json = field(j, "family", path);
  if (!family_json.is_string()) throw ConfigError(path + ".family", "expected a string");
  const auto family = family_json.get<std::string>();

  auto positive = [&](const char* key) {
    const auto k = count(field(j, key, path), path + "." + key);
    if (k == 0) throw ConfigError(path + "." + key, "must be positive");
    return k;
  };

  if (family == "conjunction") return questions::conjunction(positive("k"));
  if (family == "xor") return questions::parity(positive("k"));
  if (family == "product") return questions::product(positive("k"));
  if (family == "weighted_linear") return questions::weighted_linear(positive("dims"));
  if (family == "table") {
    auto features = indices(field(j, "features", path), path + ".features");
    const auto& rows_json = field(j, "rows", path);
    if (!rows_json.is_array()) throw ConfigError(path + ".rows", "expected an array");
    questions::TableRows rows;
    for (std::size_t k = 0; k < rows_json.size(); ++k) {
      const auto p = path + ".rows[" + std::to_string(k) + "]";
      auto key = numbers(field(rows_json[k], "key", p), p + ".key");
      const double value = number(field(rows_json[k], "value", p), p + ".value");
      if (!rows.emplace(std::move(key), value).second) throw ConfigError(p + ".key", "duplicate row");
    }
    std::string label = "table";
    if (auto it = j.find("label"); it != j.end() && it->is_string()) label = it->get<std::string>();
    return build(path, [&] { return questions::table(std::move(features), std::move(rows), label); });
  }
  if (family == "stall") {
    auto base = parse_question(field(j, "base", path), path + ".base");
    const auto& pairs_json = field(j, "pairs", path);
    if (!pairs_json.is_array() || pairs_json.empty()) {
      throw ConfigError(path + ".pairs", "expected a non-empty array of [m, n] pairs");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < pairs_json.size(); ++k) {
      const auto p = path + ".pairs[" + std::to_string(k) + "]";
      const auto pair = indices(pairs_json[k], p);
      if (pair.size() != 2) throw ConfigError(p, "expected [m, n]");
      pairs.emplace_back(pair[0], pair[1]);
    }
    return questions::stall_wrapped(base, std::move(pairs));
  }
  if (family == "chain_stall") {
    auto base = parse_question(field(j, "base", path), path + ".base");
    const auto m = count(field(j, "m", path), path + ".m");
    auto fixes = indices(field(j, "fixes", path), path + ".fixes");
    return build(path, [&] { return questions::chain_stall(base, m, std::move(fixes)); });
  }
  throw ConfigError(path + ".family", "unknown question family '" + family + "'");
}

evidence::EvidenceModel parse_evidence_model(const Json& j, const std::string& path) {
  const double p0 = number(field(j, "p0_prob", path), path + ".p0_prob");
  const auto& features_json = field(j, "features", path);
  if (!features_json.is_array()) throw ConfigError(path + ".features", "expected an array");
  std::vector<evidence::EvidenceFeature> features;
  for (std::size_t k = 0; k < features_json.size(); ++k) {
    const auto p = path + ".features[" + std::to_string(k) + "]";
    const auto& f = features_json[k];
    features.push_back({numbers(field(f, "values", p), p + ".values"),
                        numbers(field(f, "p_given_x1", p), p + ".p_given_x1"),
                        numbers(field(f, "p_given_x0", p), p + ".p_given_x0")});
  }
  return build(path, [&] { return evidence::EvidenceModel(p0, std::move(features)); });
}

}  // namespace debate::config
