#include <doctest.h>

#include <cmath>

#include "kuhn/nash.hpp"
#include "kuhn/sampling.hpp"

using namespace kuhn;

namespace {

BehavioralStrategy constant_strategy(int seat, double p) {
  BehavioralStrategy s;
  s.seat = seat;
  for (double& v : s.probs) v = p;
  return s;
}

StrategyProfile constant_profile(double p) {
  return {constant_strategy(0, p), constant_strategy(1, p), constant_strategy(2, p)};
}

}  // namespace

TEST_CASE("round_and_normalize clamps and keeps a proper distribution") {
  auto zero = round_and_normalize(constant_strategy(0, 0.0), 0.05);
  for (double p : zero.probs) CHECK(p == doctest::Approx(0.05).epsilon(1e-12));

  auto half = round_and_normalize(constant_strategy(0, 0.5), 0.05);
  for (double p : half.probs) CHECK(p == 0.5);

  auto low = round_and_normalize(constant_strategy(0, 0.02), 0.05);
  for (double p : low.probs) CHECK(p == doctest::Approx(0.05).epsilon(1e-12));

  auto high = round_and_normalize(constant_strategy(0, 0.98), 0.05);
  for (double p : high.probs) CHECK(p == doctest::Approx(0.95).epsilon(1e-12));

  CHECK_THROWS_AS(round_and_normalize(constant_strategy(0, 0.5), 0.0), std::domain_error);
  CHECK_THROWS_AS(round_and_normalize(constant_strategy(0, 0.5), 0.5), std::domain_error);

  // stays inside [eps, 1-eps] for arbitrary inputs
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    double p = rng.next_double();
    auto out = round_and_normalize(constant_strategy(0, p), 0.05);
    for (double v : out.probs) {
      CHECK(v >= 0.05);
      CHECK(v <= 0.95);
    }
  }
}

TEST_CASE("gamma sampler moments") {
  Rng rng(11);
  const long n = 1'000'000;

  double sum = 0.0;
  for (long i = 0; i < n; ++i) sum += gamma_sample(3.0, rng);
  CHECK(std::abs(sum / static_cast<double>(n) - 3.0) <= 0.01);

  double sum1 = 0.0, sumsq = 0.0;
  for (long i = 0; i < n; ++i) {
    double x = gamma_sample(1.0, rng);
    sum1 += x;
    sumsq += x * x;
  }
  double mean = sum1 / static_cast<double>(n);
  double var = sumsq / static_cast<double>(n) - mean * mean;
  CHECK(std::abs(var - 1.0) <= 0.02);

  for (int i = 0; i < 10'000; ++i) CHECK(gamma_sample(0.2, rng) > 0.0);

  CHECK_THROWS_AS(gamma_sample(0.0, rng), std::domain_error);
  CHECK_THROWS_AS(gamma_sample(-1.0, rng), std::domain_error);
}

TEST_CASE("sampled strategies keep the prior mean, whatever the concentration") {
  PriorSpec spec;
  spec.k = 10'000;
  spec.means = {constant_profile(0.5), constant_profile(0.5)};

  std::vector<double> means_by_eta;
  for (double eta : {1.0, 4.0}) {
    spec.eta = eta;
    Rng rng(17);
    SampleBank bank = create_samples(spec, rng);
    double sum = 0.0;
    for (const auto& tau : bank.at(0, 1)) sum += tau.prob(Card::King, 1);
    means_by_eta.push_back(sum / spec.k);
    CHECK(std::abs(means_by_eta.back() - 0.5) <= 0.01);
  }
  // scaling every Dirichlet parameter by a constant leaves the mean alone
  CHECK(std::abs(means_by_eta[0] - means_by_eta[1]) <= 0.02);
}

TEST_CASE("uniform2 mode ignores the means and centers at one half") {
  PriorSpec spec;
  spec.k = 10'000;
  spec.mode = PriorMode::Uniform2;
  spec.means = {constant_profile(0.9), constant_profile(0.1)};
  Rng rng(23);
  SampleBank bank = create_samples(spec, rng);
  for (int opp = 0; opp < 2; ++opp) {
    double sum = 0.0;
    for (const auto& tau : bank.at(opp, 2)) sum += tau.prob(Card::Queen, 0);
    CHECK(std::abs(sum / spec.k - 0.5) <= 0.01);
  }
}

TEST_CASE("bank shape and positivity") {
  PriorSpec spec;
  spec.k = 7;
  spec.means = {nash_profile(FamilyPoint::Mid), nash_profile(FamilyPoint::Mid)};
  Rng rng(29);
  SampleBank bank = create_samples(spec, rng);
  CHECK(bank.k == 7);
  for (int opp = 0; opp < 2; ++opp)
    for (int seat = 0; seat < 3; ++seat) {
      REQUIRE(bank.at(opp, seat).size() == 7);
      for (const auto& tau : bank.at(opp, seat)) {
        CHECK(tau.seat == seat);
        for (double p : tau.probs) {
          CHECK(p > 0.0);
          CHECK(p < 1.0);
        }
      }
    }
}

TEST_CASE("identical seeds give identical banks") {
  PriorSpec spec;
  spec.k = 5;
  spec.means = {nash_profile(FamilyPoint::Mid), nash_profile(FamilyPoint::Lower)};
  Rng a(101), b(101);
  SampleBank bank_a = create_samples(spec, a);
  SampleBank bank_b = create_samples(spec, b);
  for (int opp = 0; opp < 2; ++opp)
    for (int seat = 0; seat < 3; ++seat)
      for (int s = 0; s < 5; ++s)
        CHECK(bank_a.at(opp, seat)[static_cast<std::size_t>(s)] ==
              bank_b.at(opp, seat)[static_cast<std::size_t>(s)]);
}

TEST_CASE("prior spec validation") {
  PriorSpec spec;
  spec.means = {constant_profile(0.5), constant_profile(0.5)};
  spec.epsilon = 0.6;
  CHECK_THROWS_AS(spec.validate(), std::domain_error);
  spec.epsilon = 0.05;
  spec.eta = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::domain_error);
  spec.eta = 4.0;
  spec.k = 0;
  CHECK_THROWS_AS(spec.validate(), std::domain_error);
}
