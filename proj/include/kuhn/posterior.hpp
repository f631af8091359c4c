#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "kuhn/sampling.hpp"

namespace kuhn {

// Seat of opponent 0 or 1 relative to ours. Hand-to-hand rotation moves
// every player the same way, so the relative order never changes.
inline int opponent_seat(int our_seat, int opponent) {
  return (our_seat + 1 + opponent) % 3;
}

// Joint posterior over sample-index pairs, one k x k table per seat we can
// occupy. Each hand involves exactly one of the three configurations, and
// only that configuration's table is updated.
//
// Log weights are the authoritative state: after a few hundred hands the
// likelihood ratios between samples span thousands of orders of magnitude,
// and linear weights would underflow to an unrecoverable zero. `weights`
// holds the normalized linear view used for mixing and reporting.
struct PosteriorTable {
  int k = 0;
  std::array<std::vector<double>, 3> weights{};      // [our_seat][s0 * k + s1]
  std::array<std::vector<double>, 3> log_weights{};  // same layout, unnormalized

  static PosteriorTable uniform(int k) {
    if (k < 1) throw std::domain_error("need at least one sample per model");
    PosteriorTable t;
    t.k = k;
    const std::size_t n = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
    for (auto& w : t.weights) w.assign(n, 1.0 / static_cast<double>(n));
    for (auto& lw : t.log_weights) lw.assign(n, 0.0);
    return t;
  }

  double weight(int our_seat, int s0, int s1) const {
    return weights[static_cast<std::size_t>(our_seat)]
                  [static_cast<std::size_t>(s0 * k + s1)];
  }
};

namespace detail {

// Card assignments to the two hidden opponent seats that agree with our own
// card and with whatever the showdown revealed. Each carries the conditional
// deal probability 1/6; inconsistent observations yield no assignments.
struct ConsistentAssignment {
  Card card0;  // opponent seated one after us
  Card card1;  // opponent seated two after us
};

inline std::vector<ConsistentAssignment> consistent_assignments(const HandObservation& obs) {
  const int seat0 = opponent_seat(obs.observer, 0);
  const int seat1 = opponent_seat(obs.observer, 1);
  const auto& fixed0 = obs.revealed[static_cast<std::size_t>(seat0)];
  const auto& fixed1 = obs.revealed[static_cast<std::size_t>(seat1)];
  std::vector<ConsistentAssignment> out;
  for (Card c0 : all_cards) {
    if (c0 == obs.own_card) continue;
    if (fixed0 && *fixed0 != c0) continue;
    for (Card c1 : all_cards) {
      if (c1 == obs.own_card || c1 == c0) continue;
      if (fixed1 && *fixed1 != c1) continue;
      out.push_back({c0, c1});
    }
  }
  return out;
}

inline void validate_observation(const HandObservation& obs) {
  if (obs.observer < 0 || obs.observer > 2) throw std::invalid_argument("bad observer seat");
  if (!analyze(obs.actions).terminal)
    throw std::invalid_argument("observation of an unfinished hand");
  const auto& own = obs.revealed[static_cast<std::size_t>(obs.observer)];
  if (own && *own != obs.own_card)
    throw std::invalid_argument("observation reveals a different card for the observer");
  for (int s = 0; s < 3; ++s) {
    const auto& r = obs.revealed[static_cast<std::size_t>(s)];
    if (!r) continue;
    if (s != obs.observer && *r == obs.own_card)
      throw std::invalid_argument("observation reveals the observer's card elsewhere");
    for (int t = s + 1; t < 3; ++t) {
      const auto& r2 = obs.revealed[static_cast<std::size_t>(t)];
      if (r2 && *r2 == *r) throw std::invalid_argument("observation reveals duplicate cards");
    }
  }
}

}  // namespace detail

// Marginal probability of the opponents' observed actions under the two
// sampled strategies: the sum over consistent hidden-card assignments of the
// conditional deal probability times the product of the sampled action
// probabilities at the opponents' decision points. Our own actions are
// constant across samples and are left out; they cancel on normalization.
inline double hand_likelihood(const HandObservation& obs, const BehavioralStrategy& tau0,
                              const BehavioralStrategy& tau1) {
  detail::validate_observation(obs);
  const int seat0 = opponent_seat(obs.observer, 0);
  const int seat1 = opponent_seat(obs.observer, 1);
  if (tau0.seat != seat0 || tau1.seat != seat1)
    throw std::invalid_argument("sampled strategies do not match the opponents' seats");

  const auto steps = decisions(obs.actions);
  double total = 0.0;
  for (const auto& assign : detail::consistent_assignments(obs)) {
    double pr = 1.0 / 6.0;
    for (const Decision& d : steps) {
      if (d.seat == obs.observer) continue;
      const BehavioralStrategy& tau = d.seat == seat0 ? tau0 : tau1;
      Card card = d.seat == seat0 ? assign.card0 : assign.card1;
      double ap = tau.prob(card, d.situation);
      pr *= d.aggressive ? ap : 1.0 - ap;
    }
    total += pr;
  }
  return total;
}

// Likelihood of the hand for every sample pair of the active configuration.
// The two opponents' per-assignment factors are shared across pairs, which
// keeps the evaluation O(k^2 + k * assignments).
inline std::vector<double> pair_likelihoods(const HandObservation& obs,
                                            const SampleBank& bank) {
  detail::validate_observation(obs);
  const int k = bank.k;
  const int seat0 = opponent_seat(obs.observer, 0);
  const int seat1 = opponent_seat(obs.observer, 1);
  const auto& bank0 = bank.at(0, seat0);
  const auto& bank1 = bank.at(1, seat1);
  const auto steps = decisions(obs.actions);

  std::vector<double> like(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0.0);
  std::vector<double> f0(static_cast<std::size_t>(k)), f1(static_cast<std::size_t>(k));
  for (const auto& assign : detail::consistent_assignments(obs)) {
    for (int s = 0; s < k; ++s) {
      double p0 = 1.0, p1 = 1.0;
      for (const Decision& d : steps) {
        if (d.seat == seat0) {
          double ap = bank0[static_cast<std::size_t>(s)].prob(assign.card0, d.situation);
          p0 *= d.aggressive ? ap : 1.0 - ap;
        } else if (d.seat == seat1) {
          double ap = bank1[static_cast<std::size_t>(s)].prob(assign.card1, d.situation);
          p1 *= d.aggressive ? ap : 1.0 - ap;
        }
      }
      f0[static_cast<std::size_t>(s)] = p0;
      f1[static_cast<std::size_t>(s)] = p1;
    }
    for (int s0 = 0; s0 < k; ++s0)
      for (int s1 = 0; s1 < k; ++s1)
        like[static_cast<std::size_t>(s0 * k + s1)] +=
            (1.0 / 6.0) * f0[static_cast<std::size_t>(s0)] * f1[static_cast<std::size_t>(s1)];
  }
  return like;
}

// One exact Bayes step in log space, refreshing the normalized linear view.
inline void apply_likelihoods(std::vector<double>& log_weights, std::vector<double>& weights,
                              const std::vector<double>& like) {
  double shift = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < log_weights.size(); ++i) {
    log_weights[i] += std::log(like[i]);  // -inf when a sample rules the hand out
    shift = std::max(shift, log_weights[i]);
  }
  if (!(shift > -std::numeric_limits<double>::infinity()))
    throw std::runtime_error("observation impossible under all samples");
  double z = 0.0;
  for (std::size_t i = 0; i < log_weights.size(); ++i) {
    log_weights[i] -= shift;
    weights[i] = std::exp(log_weights[i]);
    z += weights[i];
  }
  for (double& e : weights) e /= z;
}

// Updates the configuration the observation came from: every joint weight is
// multiplied by its sample pair's likelihood of the hand and the table is
// renormalized. The other configurations are untouched.
inline void update_posterior(PosteriorTable& table, const HandObservation& obs,
                             const SampleBank& bank) {
  if (table.k != bank.k) throw std::invalid_argument("posterior and bank disagree on k");
  apply_likelihoods(table.log_weights[static_cast<std::size_t>(obs.observer)],
                    table.weights[static_cast<std::size_t>(obs.observer)],
                    pair_likelihoods(obs, bank));
}

// Posterior-mean opponent models for one configuration: per model and
// information set, the convex combination of the sampled strategies under
// the joint weights, marginalizing the other opponent's index.
inline std::array<BehavioralStrategy, 2> mixture_from_weights(const std::vector<double>& joint,
                                                              int our_seat,
                                                              const SampleBank& bank) {
  const int k = bank.k;
  if (static_cast<int>(joint.size()) != k * k)
    throw std::invalid_argument("joint weights and bank disagree on k");
  const int seat0 = opponent_seat(our_seat, 0);
  const int seat1 = opponent_seat(our_seat, 1);
  std::vector<double> w0(static_cast<std::size_t>(k), 0.0), w1(static_cast<std::size_t>(k), 0.0);
  for (int s0 = 0; s0 < k; ++s0)
    for (int s1 = 0; s1 < k; ++s1) {
      double w = joint[static_cast<std::size_t>(s0 * k + s1)];
      w0[static_cast<std::size_t>(s0)] += w;
      w1[static_cast<std::size_t>(s1)] += w;
    }
  std::array<BehavioralStrategy, 2> models{BehavioralStrategy{seat0, {}},
                                           BehavioralStrategy{seat1, {}}};
  for (int s = 0; s < k; ++s)
    for (int idx = 0; idx < 16; ++idx) {
      models[0].probs[static_cast<std::size_t>(idx)] +=
          w0[static_cast<std::size_t>(s)] *
          bank.at(0, seat0)[static_cast<std::size_t>(s)].probs[static_cast<std::size_t>(idx)];
      models[1].probs[static_cast<std::size_t>(idx)] +=
          w1[static_cast<std::size_t>(s)] *
          bank.at(1, seat1)[static_cast<std::size_t>(s)].probs[static_cast<std::size_t>(idx)];
    }
  // roundoff in the weight normalization can push a combination of
  // near-one probabilities over 1 by an ulp
  for (auto& model : models)
    for (double& p : model.probs) p = std::clamp(p, 0.0, 1.0);
  return models;
}

inline std::array<BehavioralStrategy, 2> mixture_model(const PosteriorTable& table,
                                                       int our_seat, const SampleBank& bank) {
  if (table.k != bank.k) throw std::invalid_argument("posterior and bank disagree on k");
  return mixture_from_weights(table.weights[static_cast<std::size_t>(our_seat)], our_seat,
                              bank);
}

}  // namespace kuhn
