#pragma once

#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kuhn/game.hpp"
#include "kuhn/rng.hpp"

namespace kuhn {

// One seat's behavior: the probability of the aggressive action (bet while
// unfaced, call once facing a bet) at each of the seat's 16 information
// sets, stored card-major.
struct BehavioralStrategy {
  int seat = 0;
  std::array<double, 16> probs{};

  double prob(Card card, int situation) const {
    return probs[static_cast<std::size_t>(static_cast<int>(card) * 4 + situation)];
  }
  double& prob(Card card, int situation) {
    return probs[static_cast<std::size_t>(static_cast<int>(card) * 4 + situation)];
  }
  double prob(const InfoSetKey& key) const {
    if (key.seat != seat) throw std::invalid_argument("info set belongs to another seat");
    return probs[static_cast<std::size_t>(key.index())];
  }

  friend bool operator==(const BehavioralStrategy&, const BehavioralStrategy&) = default;
};

using StrategyProfile = std::array<BehavioralStrategy, 3>;

inline void validate(const BehavioralStrategy& s) {
  if (s.seat < 0 || s.seat > 2) throw std::domain_error("strategy seat out of range");
  for (double p : s.probs)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::domain_error("action probability outside [0, 1]");
}

inline void validate(const StrategyProfile& profile) {
  for (int s = 0; s < 3; ++s) {
    if (profile[static_cast<std::size_t>(s)].seat != s)
      throw std::domain_error("profile strategies must cover seats 1..3 in order");
    validate(profile[static_cast<std::size_t>(s)]);
  }
}

inline Action act(const BehavioralStrategy& s, const InfoSetKey& key, Rng& rng) {
  double p = s.prob(key);
  return rng.next_double() < p ? aggressive_action(key.situation)
                               : passive_action(key.situation);
}

// Accepts plain decimals and exact fractions such as "23/64".
inline double parse_probability(const std::string& token) {
  std::size_t slash = token.find('/');
  double value;
  std::size_t used = 0;
  if (slash == std::string::npos) {
    value = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad probability: " + token);
  } else {
    double num = std::stod(token.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("bad probability: " + token);
    double den = std::stod(token.substr(slash + 1), &used);
    if (used != token.size() - slash - 1 || den == 0.0)
      throw std::invalid_argument("bad probability: " + token);
    value = num / den;
  }
  if (!(value >= 0.0 && value <= 1.0))
    throw std::invalid_argument("probability outside [0, 1]: " + token);
  return value;
}

// Text form, one information set per line: "position card situation prob"
// with 1-based position and situation, e.g. "2 K 2 23/64".
inline std::string format_profile(const StrategyProfile& profile) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (int seat = 0; seat < 3; ++seat)
    for (Card card : all_cards)
      for (int sit = 0; sit < 4; ++sit)
        out << seat + 1 << ' ' << to_char(card) << ' ' << sit + 1 << ' '
            << profile[static_cast<std::size_t>(seat)].prob(card, sit) << '\n';
  return out.str();
}

inline StrategyProfile parse_profile(std::istream& in) {
  StrategyProfile profile;
  std::array<std::array<bool, 16>, 3> seen{};
  for (int s = 0; s < 3; ++s) profile[static_cast<std::size_t>(s)].seat = s;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    int position = 0, situation = 0;
    char card_ch = 0;
    std::string prob_token;
    if (!(fields >> position)) continue;  // blank line
    if (!(fields >> card_ch >> situation >> prob_token))
      throw std::invalid_argument("bad strategy line: " + line);
    std::string extra;
    if (fields >> extra) throw std::invalid_argument("bad strategy line: " + line);
    if (position < 1 || position > 3 || situation < 1 || situation > 4)
      throw std::invalid_argument("bad strategy line: " + line);
    Card card = card_from_char(card_ch);
    auto& strategy = profile[static_cast<std::size_t>(position - 1)];
    strategy.prob(card, situation - 1) = parse_probability(prob_token);
    seen[static_cast<std::size_t>(position - 1)]
        [static_cast<std::size_t>(static_cast<int>(card) * 4 + situation - 1)] = true;
  }
  for (const auto& per_seat : seen)
    for (bool got : per_seat)
      if (!got) throw std::invalid_argument("strategy file missing information sets");
  return profile;
}

inline StrategyProfile parse_profile(const std::string& text) {
  std::istringstream in(text);
  return parse_profile(in);
}

}  // namespace kuhn
