#pragma once

#include <json.hpp>

#include "kuhn/harness.hpp"
#include "kuhn/posterior.hpp"

// JSON summaries and debugging dumps. Field order is deterministic
// (insertion order) so dumps are diffable across runs.

namespace kuhn {

inline nlohmann::ordered_json tournament_json(const TournamentResult& result) {
  nlohmann::ordered_json j;
  j["seed"] = result.seed;
  j["hands"] = result.hands;
  j["sets_per_grouping"] = result.sets_per_grouping;
  j["ranking"] = nlohmann::ordered_json::array();
  for (const auto& s : result.ranking) {
    nlohmann::ordered_json row;
    row["agent"] = s.agent;
    row["winrate_mchips"] = s.winrate;
    if (std::isnan(s.std_error))
      row["stderr_mchips"] = nullptr;
    else
      row["stderr_mchips"] = s.std_error;
    row["hands"] = s.hands;
    row["sets"] = s.sets;
    j["ranking"].push_back(row);
  }
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : result.rows) {
    nlohmann::ordered_json row;
    row["agent"] = r.agent;
    row["grouping"] = r.grouping;
    row["winrate_mchips"] = r.winrate;
    if (std::isnan(r.std_error))
      row["stderr_mchips"] = nullptr;
    else
      row["stderr_mchips"] = r.std_error;
    row["hands"] = r.hands;
    row["per_set"] = r.per_set;
    j["rows"].push_back(row);
  }
  return j;
}

inline nlohmann::ordered_json bank_json(const SampleBank& bank) {
  nlohmann::ordered_json j;
  j["k"] = bank.k;
  j["models"] = nlohmann::ordered_json::array();
  for (int opp = 0; opp < 2; ++opp)
    for (int seat = 0; seat < 3; ++seat) {
      nlohmann::ordered_json model;
      model["opponent"] = opp;
      model["position"] = seat + 1;
      model["samples"] = nlohmann::ordered_json::array();
      for (const auto& tau : bank.at(opp, seat)) model["samples"].push_back(tau.probs);
      j["models"].push_back(model);
    }
  return j;
}

inline nlohmann::ordered_json posterior_json(const PosteriorTable& table) {
  nlohmann::ordered_json j;
  j["k"] = table.k;
  j["configurations"] = nlohmann::ordered_json::array();
  for (int seat = 0; seat < 3; ++seat) {
    nlohmann::ordered_json cfg;
    cfg["position"] = seat + 1;
    cfg["weights"] = table.weights[static_cast<std::size_t>(seat)];
    j["configurations"].push_back(cfg);
  }
  return j;
}

}  // namespace kuhn
