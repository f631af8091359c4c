#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Three-player Kuhn poker. Every player antes one chip and receives one card
// from the four-card deck {J, Q, K, A}. Seat 0 acts first and may bet one
// chip or check; once somebody bets, each remaining seat in turn calls or
// folds (a single bet per hand, no raises). If everyone checks, or after both
// responses to a bet, the hand ends: the last player standing wins the pot
// uncontested, otherwise the highest card among the non-folders wins it at
// showdown.
//
// Seats and betting situations are 0-based throughout the library; text
// encodings (deal strings, strategy files, CLI output) are 1-based.

namespace kuhn {

// Ranks of the four-card deck. Higher value wins a showdown.
enum class Card : std::uint8_t { Jack = 0, Queen = 1, King = 2, Ace = 3 };

inline constexpr std::array<Card, 4> all_cards = {Card::Jack, Card::Queen,
                                                  Card::King, Card::Ace};

inline char to_char(Card c) {
  switch (c) {
    case Card::Jack: return 'J';
    case Card::Queen: return 'Q';
    case Card::King: return 'K';
    case Card::Ace: return 'A';
  }
  throw std::invalid_argument("bad card value");
}

inline Card card_from_char(char ch) {
  switch (ch) {
    case 'J': case 'j': return Card::Jack;
    case 'Q': case 'q': return Card::Queen;
    case 'K': case 'k': return Card::King;
    case 'A': case 'a': return Card::Ace;
  }
  throw std::invalid_argument(std::string("bad card character '") + ch + "'");
}

enum class Action : char { Check = 'k', Bet = 'b', Call = 'c', Fold = 'f' };

inline char to_char(Action a) { return static_cast<char>(a); }

inline Action action_from_char(char ch) {
  switch (ch) {
    case 'k': case 'K': return Action::Check;
    case 'b': case 'B': return Action::Bet;
    case 'c': case 'C': return Action::Call;
    case 'f': case 'F': return Action::Fold;
  }
  throw std::invalid_argument(std::string("bad action character '") + ch + "'");
}

// A public betting line, possibly partial. At most five actions can occur
// (two checks, a bet and two responses).
class ActionSeq {
 public:
  ActionSeq() = default;

  static ActionSeq parse(std::string_view text) {
    ActionSeq seq;
    for (char ch : text) seq.push_back(action_from_char(ch));
    return seq;
  }

  void push_back(Action a) {
    if (size_ == static_cast<int>(actions_.size()))
      throw std::length_error("betting line longer than five actions");
    actions_[static_cast<std::size_t>(size_++)] = a;
  }

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Action operator[](int i) const { return actions_[static_cast<std::size_t>(i)]; }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < size_; ++i) out += to_char(actions_[static_cast<std::size_t>(i)]);
    return out;
  }

  friend bool operator==(const ActionSeq& a, const ActionSeq& b) {
    if (a.size_ != b.size_) return false;
    for (int i = 0; i < a.size_; ++i)
      if (a.actions_[static_cast<std::size_t>(i)] != b.actions_[static_cast<std::size_t>(i)])
        return false;
    return true;
  }

 private:
  std::array<Action, 5> actions_{};
  int size_ = 0;
};

struct SeqState {
  bool terminal = false;
  int acting = -1;                  // seat to move, -1 once terminal
  int bettor = -1;                  // seat that bet, -1 before any bet
  int responses = 0;                // calls/folds given so far
  bool first_response_fold = false;
};

// Validates a line against the betting rules and reports whose turn it is.
inline SeqState analyze(const ActionSeq& seq) {
  SeqState st;
  int checks = 0;
  for (int i = 0; i < seq.size(); ++i) {
    Action a = seq[i];
    if (st.bettor < 0) {
      if (checks == 3) throw std::invalid_argument("illegal line: " + seq.to_string());
      if (a == Action::Check) {
        ++checks;
      } else if (a == Action::Bet) {
        st.bettor = checks;
      } else {
        throw std::invalid_argument("illegal line: " + seq.to_string());
      }
    } else {
      if (st.responses == 2 || (a != Action::Call && a != Action::Fold))
        throw std::invalid_argument("illegal line: " + seq.to_string());
      if (st.responses == 0) st.first_response_fold = (a == Action::Fold);
      ++st.responses;
    }
  }
  st.terminal = (checks == 3) || (st.bettor >= 0 && st.responses == 2);
  if (!st.terminal)
    st.acting = st.bettor < 0 ? checks : (st.bettor + 1 + st.responses) % 3;
  return st;
}

inline bool is_terminal(const ActionSeq& seq) { return analyze(seq).terminal; }

inline int acting_seat(const ActionSeq& seq) { return analyze(seq).acting; }

inline std::array<Action, 2> legal_actions(const ActionSeq& seq) {
  SeqState st = analyze(seq);
  if (st.terminal) throw std::logic_error("no actions at terminal");
  if (st.bettor < 0) return {Action::Check, Action::Bet};
  return {Action::Call, Action::Fold};
}

// Betting situations per seat, numbered 0..3:
//   0  nobody has bet yet (check or bet)
//   1  facing a bet as the first responder
//   2  facing a bet after the other responder folded
//   3  facing a bet after the other responder called
inline std::optional<int> situation_of(int seat, const ActionSeq& seq) {
  SeqState st = analyze(seq);
  if (st.terminal || st.acting != seat) return std::nullopt;
  if (st.bettor < 0) return 0;
  if (st.responses == 0) return 1;
  return st.first_response_fold ? 2 : 3;
}

// The public prefix that defines each (seat, situation) pair.
inline ActionSeq situation_prefix(int seat, int situation) {
  static const std::array<std::array<const char*, 4>, 3> prefixes = {{
      {"", "kkb", "kbf", "kbc"},
      {"k", "b", "kkbf", "kkbc"},
      {"kk", "kb", "bf", "bc"},
  }};
  if (seat < 0 || seat > 2 || situation < 0 || situation > 3)
    throw std::out_of_range("seat or situation out of range");
  return ActionSeq::parse(prefixes[static_cast<std::size_t>(seat)]
                                  [static_cast<std::size_t>(situation)]);
}

// The aggressive action is a bet while unfaced and a call once facing a bet.
inline Action aggressive_action(int situation) {
  return situation == 0 ? Action::Bet : Action::Call;
}

inline Action passive_action(int situation) {
  return situation == 0 ? Action::Check : Action::Fold;
}

struct Deal {
  std::array<Card, 3> cards{};  // by seat

  Card operator[](int seat) const { return cards[static_cast<std::size_t>(seat)]; }

  static Deal parse(std::string_view text) {
    if (text.size() != 3) throw std::invalid_argument("deal must name three cards");
    Deal d{{card_from_char(text[0]), card_from_char(text[1]), card_from_char(text[2])}};
    if (d.cards[0] == d.cards[1] || d.cards[0] == d.cards[2] || d.cards[1] == d.cards[2])
      throw std::invalid_argument("deal cards must be distinct: " + std::string(text));
    return d;
  }

  std::string to_string() const {
    return {to_char(cards[0]), to_char(cards[1]), to_char(cards[2])};
  }

  friend bool operator==(const Deal& a, const Deal& b) = default;
};

// All 24 ordered deals of three distinct cards, each with prior 1/24.
inline const std::vector<Deal>& all_deals() {
  static const std::vector<Deal> deals = [] {
    std::vector<Deal> out;
    for (Card c0 : all_cards)
      for (Card c1 : all_cards)
        for (Card c2 : all_cards) {
          if (c0 == c1 || c0 == c2 || c1 == c2) continue;
          out.push_back(Deal{{c0, c1, c2}});
        }
    return out;
  }();
  return deals;
}

inline constexpr double deal_probability = 1.0 / 24.0;

struct Decision {
  int seat = 0;
  int situation = 0;
  Action action = Action::Check;
  bool aggressive = false;
};

// Attributes each step of a line to the acting seat and its situation.
inline std::vector<Decision> decisions(const ActionSeq& seq) {
  std::vector<Decision> out;
  out.reserve(static_cast<std::size_t>(seq.size()));
  ActionSeq prefix;
  for (int i = 0; i < seq.size(); ++i) {
    SeqState st = analyze(prefix);
    if (st.terminal) throw std::invalid_argument("actions past terminal");
    int sit = st.bettor < 0 ? 0
              : st.responses == 0 ? 1
              : st.first_response_fold ? 2 : 3;
    Action a = seq[i];
    out.push_back({st.acting, sit, a, a == aggressive_action(sit)});
    prefix.push_back(a);
  }
  return out;
}

// Net chips per seat: one ante each plus one chip per bet or call; the sole
// survivor, or the best card among the non-folders, takes the whole pot.
inline std::array<int, 3> payoff(const Deal& deal, const ActionSeq& seq) {
  if (!is_terminal(seq)) throw std::invalid_argument("payoff of a non-terminal line");
  std::array<int, 3> contrib = {1, 1, 1};
  std::array<bool, 3> folded = {false, false, false};
  for (const Decision& d : decisions(seq)) {
    if (d.action == Action::Bet || d.action == Action::Call)
      ++contrib[static_cast<std::size_t>(d.seat)];
    else if (d.action == Action::Fold)
      folded[static_cast<std::size_t>(d.seat)] = true;
  }
  int pot = contrib[0] + contrib[1] + contrib[2];
  int winner = -1;
  for (int s = 0; s < 3; ++s)
    if (!folded[static_cast<std::size_t>(s)] && (winner < 0 || deal[s] > deal[winner]))
      winner = s;
  std::array<int, 3> net{};
  for (int s = 0; s < 3; ++s)
    net[static_cast<std::size_t>(s)] =
        (s == winner ? pot : 0) - contrib[static_cast<std::size_t>(s)];
  return net;
}

// What one seat gets to see once a hand is over: the public line, its own
// card, and the cards of everyone who reached showdown. An uncontested win
// reveals nothing.
struct HandObservation {
  int observer = 0;
  Card own_card = Card::Jack;
  ActionSeq actions;
  std::array<std::optional<Card>, 3> revealed;
};

inline HandObservation observe(const Deal& deal, const ActionSeq& seq, int observer) {
  if (observer < 0 || observer > 2) throw std::out_of_range("observer seat");
  if (!is_terminal(seq)) throw std::invalid_argument("observation of an unfinished hand");
  HandObservation obs;
  obs.observer = observer;
  obs.own_card = deal[observer];
  obs.actions = seq;
  std::array<bool, 3> folded = {false, false, false};
  for (const Decision& d : decisions(seq))
    if (d.action == Action::Fold) folded[static_cast<std::size_t>(d.seat)] = true;
  int live = 0;
  for (bool f : folded) live += f ? 0 : 1;
  if (live >= 2)
    for (int s = 0; s < 3; ++s)
      if (!folded[static_cast<std::size_t>(s)])
        obs.revealed[static_cast<std::size_t>(s)] = deal[s];
  return obs;
}

struct InfoSetKey {
  int seat = 0;
  Card card = Card::Jack;
  int situation = 0;

  // Card-major index into a seat's 16 information sets.
  int index() const { return static_cast<int>(card) * 4 + situation; }

  friend bool operator==(const InfoSetKey&, const InfoSetKey&) = default;
};

inline std::vector<InfoSetKey> enumerate_infosets(int seat) {
  if (seat < 0 || seat > 2) throw std::out_of_range("seat out of range");
  std::vector<InfoSetKey> keys;
  keys.reserve(16);
  for (Card c : all_cards)
    for (int sit = 0; sit < 4; ++sit) keys.push_back({seat, c, sit});
  return keys;
}

// The 13 terminal betting lines, in depth-first order.
inline const std::vector<ActionSeq>& terminal_sequences() {
  static const std::vector<ActionSeq> lines = [] {
    std::vector<ActionSeq> out;
    auto walk = [&out](auto&& self, const ActionSeq& seq) -> void {
      if (is_terminal(seq)) {
        out.push_back(seq);
        return;
      }
      for (Action a : legal_actions(seq)) {
        ActionSeq next = seq;
        next.push_back(a);
        self(self, next);
      }
    };
    walk(walk, ActionSeq{});
    return out;
  }();
  return lines;
}

}  // namespace kuhn
