#pragma once

#include <algorithm>
#include <limits>

#include "kuhn/gamma.hpp"
#include "kuhn/strategy.hpp"

namespace kuhn {

enum class PriorMode {
  Informed,  // Dirichlet with mean at the supplied strategy, scaled by eta
  Uniform2,  // every Dirichlet parameter fixed at 2 (uniform mean)
};

// Prior over the six opponent models: one mean strategy per (opponent,
// seat), a floor epsilon that removes zero-probability actions from the
// means, a concentration multiplier eta, and the number of samples k drawn
// per model.
struct PriorSpec {
  double epsilon = 0.05;
  double eta = 4.0;
  int k = 10;
  PriorMode mode = PriorMode::Informed;
  std::array<StrategyProfile, 2> means{};

  void validate() const {
    if (!(epsilon > 0.0 && epsilon < 0.5))
      throw std::domain_error("epsilon must lie in (0, 0.5)");
    if (!(eta > 0.0)) throw std::domain_error("eta must be positive");
    if (k < 1) throw std::domain_error("need at least one sample per model");
  }
};

// Clamps both action probabilities of every information set into
// [epsilon, 1-epsilon], then renormalizes the pair.
inline BehavioralStrategy round_and_normalize(const BehavioralStrategy& s, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::domain_error("epsilon must lie in (0, 0.5)");
  BehavioralStrategy out = s;
  for (double& p : out.probs) {
    double aggressive = std::clamp(p, epsilon, 1.0 - epsilon);
    double passive = std::clamp(1.0 - p, epsilon, 1.0 - epsilon);
    p = aggressive / (aggressive + passive);
  }
  return out;
}

// The k sampled strategies per opponent model. Opponent 0 is the player
// seated one after ours each hand, opponent 1 the one after that; the
// rotation between hands preserves this relative order, so six (opponent,
// seat) models cover every arrangement.
struct SampleBank {
  int k = 0;
  std::array<std::array<std::vector<BehavioralStrategy>, 3>, 2> samples{};

  const std::vector<BehavioralStrategy>& at(int opponent, int seat) const {
    return samples[static_cast<std::size_t>(opponent)][static_cast<std::size_t>(seat)];
  }
};

// Draws the bank: per model and information set, k independent Dirichlet
// draws realized as normalized Gamma(alpha, 1) pairs over the two actions.
inline SampleBank create_samples(const PriorSpec& spec, Rng& rng) {
  spec.validate();
  SampleBank bank;
  bank.k = spec.k;
  for (int opp = 0; opp < 2; ++opp) {
    for (int seat = 0; seat < 3; ++seat) {
      const BehavioralStrategy& raw =
          spec.means[static_cast<std::size_t>(opp)][static_cast<std::size_t>(seat)];
      validate(raw);
      BehavioralStrategy mean = round_and_normalize(raw, spec.epsilon);
      auto& list = bank.samples[static_cast<std::size_t>(opp)][static_cast<std::size_t>(seat)];
      list.assign(static_cast<std::size_t>(spec.k), BehavioralStrategy{seat, {}});
      for (int idx = 0; idx < 16; ++idx) {
        double alpha_aggressive = 2.0, alpha_passive = 2.0;
        if (spec.mode == PriorMode::Informed) {
          double p = mean.probs[static_cast<std::size_t>(idx)];
          alpha_aggressive = spec.eta * p;
          alpha_passive = spec.eta * (1.0 - p);
        }
        for (int s = 0; s < spec.k; ++s) {
          double ya = gamma_sample(alpha_aggressive, rng);
          double yp = gamma_sample(alpha_passive, rng);
          // small-shape draws can be absorbed by the addition; keep the
          // ratio strictly inside (0, 1)
          double p = std::clamp(ya / (ya + yp), std::numeric_limits<double>::min(),
                                1.0 - std::numeric_limits<double>::epsilon() / 2);
          list[static_cast<std::size_t>(s)].probs[static_cast<std::size_t>(idx)] = p;
        }
      }
    }
  }
  return bank;
}

}  // namespace kuhn
