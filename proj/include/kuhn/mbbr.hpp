#pragma once

#include <functional>

#include "kuhn/agent.hpp"
#include "kuhn/best_response.hpp"
#include "kuhn/nash.hpp"
#include "kuhn/posterior.hpp"

namespace kuhn {

// How the joint posterior treats the seat rotation. A sample index names one
// draw of an opponent across all three of its seats, so the evidence from
// every hand can accumulate in a single joint table (Shared); alternatively
// each of the three seat configurations keeps its own table and learns only
// from the hands played in that seat (PerSeat).
enum class PosteriorScope { Shared, PerSeat };

// Bayesian best-response agent: play a default equilibrium strategy for the
// first switch_hand hands while updating posteriors over sampled opponent
// strategies from every observation, then best-respond each hand to the
// posterior-mean opponent models.
struct MbbrConfig {
  double epsilon = 0.05;
  int k = 10;
  long switch_hand = 100;  // hands played on the default strategy
  double eta = 4.0;
  PriorMode prior_mode = PriorMode::Informed;
  PosteriorScope posterior_scope = PosteriorScope::PerSeat;
  StrategyProfile default_profile = nash_profile(FamilyPoint::Lower);
  StrategyProfile prior_mean = nash_profile(FamilyPoint::Mid);
  std::uint64_t sample_seed = 0;

  // Optional per-hand trace of the opponent models the agent responds to.
  std::function<void(long hand, int seat, const std::array<BehavioralStrategy, 2>& models)>
      trace_models;

  PriorSpec prior_spec() const {
    PriorSpec spec;
    spec.epsilon = epsilon;
    spec.eta = eta;
    spec.k = k;
    spec.mode = prior_mode;
    spec.means = {prior_mean, prior_mean};
    return spec;
  }

  void validate() const {
    prior_spec().validate();
    if (switch_hand < 0) throw std::domain_error("switch hand must be >= 0");
    kuhn::validate(default_profile);
    kuhn::validate(prior_mean);
  }
};

class MbbrAgent final : public Agent {
 public:
  explicit MbbrAgent(const MbbrConfig& cfg)
      : cfg_(cfg), posterior_(PosteriorTable::uniform(cfg.k)) {
    cfg_.validate();
    Rng sample_rng(cfg_.sample_seed);
    bank_ = create_samples(cfg_.prior_spec(), sample_rng);
    const std::size_t n = static_cast<std::size_t>(cfg_.k) * static_cast<std::size_t>(cfg_.k);
    shared_weights_.assign(n, 1.0 / static_cast<double>(n));
    shared_log_weights_.assign(n, 0.0);
  }

  void begin_hand(int seat, Card, long hand_index) override {
    seat_ = seat;
    hand_ = hand_index;
    if (exploiting() && !response_valid_) {
      auto models = opponent_models(seat_);
      if (cfg_.trace_models) cfg_.trace_models(hand_, seat_, models);
      response_ = best_response(seat_, models[0], models[1]).strategy;
      response_valid_ = true;
    }
  }

  Action act(const InfoSetKey& key, Rng& rng) override {
    if (key.seat != seat_) throw std::logic_error("acting from an unexpected seat");
    const BehavioralStrategy& strategy =
        exploiting() ? response_ : cfg_.default_profile[static_cast<std::size_t>(seat_)];
    return kuhn::act(strategy, key, rng);
  }

  void end_hand(const HandObservation& obs) override {
    if (cfg_.posterior_scope == PosteriorScope::Shared) {
      apply_likelihoods(shared_log_weights_, shared_weights_, pair_likelihoods(obs, bank_));
    } else {
      update_posterior(posterior_, obs, bank_);
    }
    ++update_counts_[static_cast<std::size_t>(obs.observer)];
    response_valid_ = false;  // models changed; next hand recomputes
  }

  // Posterior-mean models of the two opponents for the given seat.
  std::array<BehavioralStrategy, 2> opponent_models(int seat) const {
    if (cfg_.posterior_scope == PosteriorScope::Shared)
      return mixture_from_weights(shared_weights_, seat, bank_);
    return mixture_model(posterior_, seat, bank_);
  }

  bool exploiting() const { return hand_ > cfg_.switch_hand; }
  const MbbrConfig& config() const { return cfg_; }
  const SampleBank& bank() const { return bank_; }
  const PosteriorTable& posterior() const { return posterior_; }
  const std::vector<double>& shared_weights() const { return shared_weights_; }
  const std::array<long, 3>& update_counts() const { return update_counts_; }

  const BehavioralStrategy& current_response() const {
    if (!response_valid_) throw std::logic_error("no best response cached");
    return response_;
  }

 private:
  MbbrConfig cfg_;
  SampleBank bank_;
  PosteriorTable posterior_;            // PerSeat scope
  std::vector<double> shared_weights_;  // Shared scope
  std::vector<double> shared_log_weights_;
  BehavioralStrategy response_{};
  std::array<long, 3> update_counts_{};
  bool response_valid_ = false;
  int seat_ = 0;
  long hand_ = 0;
};

}  // namespace kuhn
