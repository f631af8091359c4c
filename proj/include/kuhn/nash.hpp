#pragma once

#include <string_view>

#include "kuhn/strategy.hpp"

namespace kuhn {

// The robust slice of the known parameterized equilibrium family for this
// game, indexed by the second seat's bluff frequency beta in [0, 1/4]. The
// remaining entries are pinned by the indifference conditions of the game
// (or forced outright by dominance), and every profile produced here is
// checked numerically against the best-response oracle in the test suite.
inline StrategyProfile robust_family_profile(double beta) {
  if (!(beta >= 0.0 && beta <= 0.25))
    throw std::domain_error("family parameter must lie in [0, 1/4]");

  StrategyProfile profile;
  for (int seat = 0; seat < 3; ++seat) {
    auto& s = profile[static_cast<std::size_t>(seat)];
    s.seat = seat;
    // Dominance-forced cells, identical across the family:
    //   a call holding the Jack always loses the showdown                 -> 0
    //   an overcall holding the Queen always meets a higher card          -> 0
    //   a call holding the Ace always wins the pot                        -> 1
    for (int sit = 1; sit < 4; ++sit) s.prob(Card::Ace, sit) = 1.0;
  }

  auto& p1 = profile[0];
  auto& p2 = profile[1];
  auto& p3 = profile[2];

  // Seat 1 never opens; with the King it calls a lone bet half the time,
  // which keeps the later seats' bluffs exactly break-even.
  p1.prob(Card::King, 2) = 0.5;

  // Seat 2 bluff-bets the Jack and Queen at beta and value-bets the Ace at
  // 4*beta (seat 1's King indifference); its King calls are set by the
  // third seat's bluff indifference and by seat 1's Ace-bet constraint.
  p2.prob(Card::Jack, 0) = beta;
  p2.prob(Card::Queen, 0) = beta;
  p2.prob(Card::King, 1) = (2.0 + 7.0 * beta) * beta;
  p2.prob(Card::King, 2) = (1.0 + 3.0 * beta) / 2.0;
  p2.prob(Card::Ace, 0) = 4.0 * beta;

  // Seat 3 bluff-bets the Queen half the time and always bets the Ace.
  p3.prob(Card::Queen, 0) = 0.5;
  p3.prob(Card::King, 2) = 0.5 - 2.0 * beta;
  p3.prob(Card::King, 3) = 4.0 * beta;
  p3.prob(Card::Ace, 0) = 1.0;

  return profile;
}

// Named points of the robust slice: its lower bound, midpoint and upper
// bound. At the upper bound several indifference conditions become tight
// (the Ace value-bet reaches probability one), which is what ends the slice.
enum class FamilyPoint { Lower, Mid, Upper };

inline std::string_view to_string(FamilyPoint p) {
  switch (p) {
    case FamilyPoint::Lower: return "lower";
    case FamilyPoint::Mid: return "mid";
    case FamilyPoint::Upper: return "upper";
  }
  throw std::invalid_argument("bad family point");
}

inline FamilyPoint family_point_from_string(std::string_view name) {
  if (name == "lower" || name == "n1") return FamilyPoint::Lower;
  if (name == "mid" || name == "midpoint" || name == "n3") return FamilyPoint::Mid;
  if (name == "upper" || name == "n2") return FamilyPoint::Upper;
  throw std::invalid_argument("unknown equilibrium point: " + std::string(name));
}

inline double family_beta(FamilyPoint point) {
  switch (point) {
    case FamilyPoint::Lower: return 0.0;
    case FamilyPoint::Mid: return 0.125;
    case FamilyPoint::Upper: return 0.25;
  }
  throw std::invalid_argument("bad family point");
}

inline StrategyProfile nash_profile(FamilyPoint point) {
  return robust_family_profile(family_beta(point));
}

}  // namespace kuhn
