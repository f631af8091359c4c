#pragma once

#include <string_view>
#include <vector>

#include "kuhn/strategy.hpp"

namespace kuhn {

// Deliberately simple exploitable opponents used as the stand-in pool for
// tournaments and tests. All of them are static card-driven rules.
inline const std::vector<std::string>& zoo_names() {
  static const std::vector<std::string> names = {
      "always-aggressive", "calling-station", "honest", "tight-folder",
      "uniform-random"};
  return names;
}

inline StrategyProfile zoo_profile(std::string_view name) {
  StrategyProfile profile;
  for (int seat = 0; seat < 3; ++seat) profile[static_cast<std::size_t>(seat)].seat = seat;

  auto fill = [&profile](auto&& rule) {
    for (auto& s : profile)
      for (Card card : all_cards)
        for (int sit = 0; sit < 4; ++sit) s.prob(card, sit) = rule(card, sit);
  };

  if (name == "always-aggressive") {
    fill([](Card, int) { return 1.0; });
  } else if (name == "calling-station") {
    // never bets, never folds
    fill([](Card, int sit) { return sit == 0 ? 0.0 : 1.0; });
  } else if (name == "honest") {
    fill([](Card card, int) { return card >= Card::King ? 1.0 : 0.0; });
  } else if (name == "tight-folder") {
    fill([](Card card, int) { return card == Card::Ace ? 1.0 : 0.0; });
  } else if (name == "uniform-random") {
    fill([](Card, int) { return 0.5; });
  } else {
    throw std::invalid_argument("unknown zoo agent: " + std::string(name));
  }
  return profile;
}

}  // namespace kuhn
