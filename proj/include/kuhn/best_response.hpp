#pragma once

#include <algorithm>
#include <limits>

#include "kuhn/strategy.hpp"

namespace kuhn {

struct LineDecision {
  int seat = 0;
  int situation = 0;
  bool aggressive = false;
};

struct BettingLine {
  ActionSeq seq;
  std::array<LineDecision, 5> decisions{};
  int n_decisions = 0;
};

inline const std::vector<BettingLine>& betting_lines() {
  static const std::vector<BettingLine> lines = [] {
    std::vector<BettingLine> out;
    for (const ActionSeq& seq : terminal_sequences()) {
      BettingLine line;
      line.seq = seq;
      for (const Decision& d : decisions(seq))
        line.decisions[static_cast<std::size_t>(line.n_decisions++)] = {
            d.seat, d.situation, d.aggressive};
      out.push_back(line);
    }
    return out;
  }();
  return lines;
}

// Chip outcome of every (deal, line) pair, deal-major.
inline const std::vector<std::array<int, 3>>& line_payoffs() {
  static const std::vector<std::array<int, 3>> table = [] {
    std::vector<std::array<int, 3>> out;
    out.reserve(all_deals().size() * betting_lines().size());
    for (const Deal& deal : all_deals())
      for (const BettingLine& line : betting_lines()) out.push_back(payoff(deal, line.seq));
    return out;
  }();
  return table;
}

// Indices into all_deals() of the deals giving `card` to `seat`.
inline const std::vector<int>& deals_with(int seat, Card card) {
  static const auto table = [] {
    std::array<std::array<std::vector<int>, 4>, 3> t;
    for (std::size_t i = 0; i < all_deals().size(); ++i)
      for (int s = 0; s < 3; ++s)
        t[static_cast<std::size_t>(s)][static_cast<std::size_t>(all_deals()[i][s])]
            .push_back(static_cast<int>(i));
    return t;
  }();
  if (seat < 0 || seat > 2) throw std::out_of_range("seat out of range");
  return table[static_cast<std::size_t>(seat)][static_cast<std::size_t>(card)];
}

// Exact expected chips per seat: the sum over all 24 deals and 13 terminal
// lines of the line's reach probability times its payoff.
inline std::array<double, 3> profile_value(const StrategyProfile& profile) {
  validate(profile);
  const auto& lines = betting_lines();
  const auto& pay = line_payoffs();
  std::array<double, 3> value{};
  for (std::size_t di = 0; di < all_deals().size(); ++di) {
    const Deal& deal = all_deals()[di];
    for (std::size_t li = 0; li < lines.size(); ++li) {
      const BettingLine& line = lines[li];
      double pr = deal_probability;
      for (int i = 0; i < line.n_decisions; ++i) {
        const LineDecision& d = line.decisions[static_cast<std::size_t>(i)];
        double ap = profile[static_cast<std::size_t>(d.seat)].prob(deal[d.seat], d.situation);
        pr *= d.aggressive ? ap : 1.0 - ap;
      }
      const auto& p = pay[di * lines.size() + li];
      for (int s = 0; s < 3; ++s) value[static_cast<std::size_t>(s)] += pr * p[static_cast<std::size_t>(s)];
    }
  }
  return value;
}

struct ResponseResult {
  BehavioralStrategy strategy;  // pure: every probability exactly 0 or 1
  double value = 0.0;           // expected chips per hand for the responder
};

// Exact best response for one seat against fixed opponent strategies. The
// choice decomposes by our private card, so for each card all 16 pure
// assignments over our four situations are scored directly; ties keep the
// earliest candidate in counting order, i.e. lean passive (mask 0 is fully
// passive and bit `s` plays the aggressive action in situation s).
inline ResponseResult best_response(int seat, const BehavioralStrategy& opp_a,
                                    const BehavioralStrategy& opp_b) {
  if (seat < 0 || seat > 2) throw std::out_of_range("seat out of range");
  if (opp_a.seat == opp_b.seat || opp_a.seat == seat || opp_b.seat == seat)
    throw std::invalid_argument("best response needs the two other seats' strategies");
  validate(opp_a);
  validate(opp_b);
  std::array<const BehavioralStrategy*, 3> by_seat{};
  by_seat[static_cast<std::size_t>(opp_a.seat)] = &opp_a;
  by_seat[static_cast<std::size_t>(opp_b.seat)] = &opp_b;

  const auto& deals = all_deals();
  const auto& lines = betting_lines();
  const auto& pay = line_payoffs();

  ResponseResult result;
  result.strategy.seat = seat;
  for (Card card : all_cards) {
    double best = -std::numeric_limits<double>::infinity();
    int best_mask = 0;
    for (int mask = 0; mask < 16; ++mask) {
      double v = 0.0;
      for (int di : deals_with(seat, card)) {
        const Deal& deal = deals[static_cast<std::size_t>(di)];
        for (std::size_t li = 0; li < lines.size(); ++li) {
          const BettingLine& line = lines[li];
          double pr = deal_probability;
          bool consistent = true;
          for (int i = 0; i < line.n_decisions && consistent; ++i) {
            const LineDecision& d = line.decisions[static_cast<std::size_t>(i)];
            if (d.seat == seat) {
              if ((((mask >> d.situation) & 1) != 0) != d.aggressive) consistent = false;
            } else {
              double ap = by_seat[static_cast<std::size_t>(d.seat)]->prob(deal[d.seat], d.situation);
              pr *= d.aggressive ? ap : 1.0 - ap;
            }
          }
          if (consistent)
            v += pr * pay[static_cast<std::size_t>(di) * lines.size() + li]
                     [static_cast<std::size_t>(seat)];
        }
      }
      if (v > best) {
        best = v;
        best_mask = mask;
      }
    }
    for (int sit = 0; sit < 4; ++sit)
      result.strategy.prob(card, sit) = (best_mask >> sit) & 1 ? 1.0 : 0.0;
    result.value += best;
  }
  return result;
}

// Per-seat gain of the best response over the profile's own value, floored
// at zero; all three gains vanish exactly at a Nash equilibrium.
inline std::array<double, 3> exploitability(const StrategyProfile& profile) {
  const auto base = profile_value(profile);
  std::array<double, 3> gain{};
  for (int s = 0; s < 3; ++s) {
    auto br = best_response(s, profile[static_cast<std::size_t>((s + 1) % 3)],
                            profile[static_cast<std::size_t>((s + 2) % 3)]);
    gain[static_cast<std::size_t>(s)] = std::max(0.0, br.value - base[static_cast<std::size_t>(s)]);
  }
  return gain;
}

}  // namespace kuhn
