#pragma once

#include <memory>
#include <utility>

#include "kuhn/strategy.hpp"

namespace kuhn {

// A participant in repeated play. The match driver announces each hand (our
// seat, our card, the 1-based hand index), asks for an action at each of our
// decision points, and finally delivers our view of the finished hand.
// Static strategies only need act().
class Agent {
 public:
  virtual ~Agent() = default;
  virtual void begin_hand(int /*seat*/, Card /*card*/, long /*hand_index*/) {}
  virtual Action act(const InfoSetKey& key, Rng& rng) = 0;
  virtual void end_hand(const HandObservation& /*obs*/) {}
};

// Plays a fixed behavioral profile, one strategy per seat.
class StrategyAgent final : public Agent {
 public:
  explicit StrategyAgent(StrategyProfile profile) : profile_(std::move(profile)) {
    validate(profile_);
  }

  Action act(const InfoSetKey& key, Rng& rng) override {
    return kuhn::act(profile_[static_cast<std::size_t>(key.seat)], key, rng);
  }

  const StrategyProfile& profile() const { return profile_; }

 private:
  StrategyProfile profile_;
};

}  // namespace kuhn
