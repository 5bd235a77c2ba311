#pragma once

// JSON descriptions of priors, questions and evidence models. Every parse
// error is a ConfigError naming the offending field path.
//
//   prior:    {"kind": "explicit", "atoms": [{"world": [..], "p": ..}, ..]}
//             {"kind": "product", "features": [{"values": [..], "probs": [..]}, ..]}
//             {"kind": "bernoulli", "dims": D, "p": p}    (shorthand)
//   question: {"family": "conjunction" | "xor" | "product", "k": K}
//             {"family": "weighted_linear", "dims": D}
//             {"family": "table", "features": [..], "rows": [{"key": [..], "value": v}, ..]}
//             {"family": "stall", "base": {..}, "pairs": [[m, n], ..]}
//             {"family": "chain_stall", "base": {..}, "m": m, "fixes": [..]}
//   evidence: {"p0_prob": P(X=1), "features": [{"values": [..],
//              "p_given_x1": [..], "p_given_x0": [..]}, ..]}

#include <string>

#include "json.hpp"

#include "debate/independent_evidence.hpp"
#include "debate/question.hpp"
#include "debate/world.hpp"

namespace debate::config {

using Json = nlohmann::json;

Prior parse_prior(const Json& j, const std::string& path = "prior");
Question parse_question(const Json& j, const std::string& path = "question");
evidence::EvidenceModel parse_evidence_model(const Json& j, const std::string& path = "evidence");

}  // namespace debate::config
