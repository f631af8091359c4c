#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <thread>

#include "kuhn/mbbr.hpp"
#include "kuhn/zoo.hpp"

namespace kuhn {

// Deals are attached to seats, not agents, so every permutation match of a
// duplicate set consumes the same schedule.
struct DealSchedule {
  std::uint64_t seed = 0;
  std::vector<Deal> deals;

  static DealSchedule random(std::uint64_t seed, long hands) {
    DealSchedule s;
    s.seed = seed;
    s.deals.reserve(static_cast<std::size_t>(hands));
    Rng rng(seed);
    for (long i = 0; i < hands; ++i)
      s.deals.push_back(all_deals()[rng.below(all_deals().size())]);
    return s;
  }

  // One 3-character deal per line, e.g. "QKA".
  void save(std::ostream& out) const {
    for (const Deal& d : deals) out << d.to_string() << '\n';
  }

  static DealSchedule load(std::istream& in) {
    DealSchedule s;
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty()) continue;
      s.deals.push_back(Deal::parse(line));
    }
    return s;
  }
};

// Seat occupied at (0-based) hand t by whoever started in initial_seat: the
// first player to act moves to last, so seats advance by two each hand.
inline int seat_at_hand(int initial_seat, long hand, bool rotate = true) {
  if (!rotate) return initial_seat;
  return static_cast<int>((initial_seat + 2 * (hand % 3)) % 3);
}

inline const std::vector<std::string>& agent_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out = {"mbbr", "nash-lower", "nash-mid", "nash-upper"};
    for (const auto& z : zoo_names()) out.push_back(z);
    return out;
  }();
  return names;
}

// Instantiates a roster agent. The seed only matters for agents with sampled
// internal state (mbbr); static strategies ignore it.
inline std::unique_ptr<Agent> make_agent(const std::string& name, const MbbrConfig& mbbr,
                                         std::uint64_t seed) {
  if (name == "mbbr") {
    MbbrConfig cfg = mbbr;
    cfg.sample_seed = seed;
    return std::make_unique<MbbrAgent>(cfg);
  }
  if (name == "nash-lower" || name == "n1" || name == "nash-mid" || name == "n3" ||
      name == "nash-upper" || name == "n2")
    return std::make_unique<StrategyAgent>(nash_profile(family_point_from_string(
        name.substr(0, 5) == "nash-" ? name.substr(5) : name)));
  for (const auto& z : zoo_names())
    if (name == z) return std::make_unique<StrategyAgent>(zoo_profile(name));
  throw std::invalid_argument("unknown agent: " + name);
}

struct MatchSpec {
  std::array<std::string, 3> agents;  // by slot
  long hands = 3000;
  std::uint64_t seed = 1;
  std::array<int, 3> initial_seats = {0, 1, 2};  // slot -> seat at the first hand
  bool rotate_seats = true;
};

struct MatchResult {
  std::array<long, 3> chips{};  // by slot
  long hands = 0;

  double winrate_mchips(int slot) const {
    return hands == 0 ? 0.0
                      : 1000.0 * static_cast<double>(chips[static_cast<std::size_t>(slot)]) /
                            static_cast<double>(hands);
  }
};

inline MatchResult run_match(const MatchSpec& spec, const DealSchedule& schedule,
                             const MbbrConfig& mbbr) {
  if (spec.hands < 1) throw std::invalid_argument("a match needs at least one hand");
  if (static_cast<long>(schedule.deals.size()) < spec.hands)
    throw std::invalid_argument("deal schedule shorter than the match");
  {
    std::array<bool, 3> seen{};
    for (int s : spec.initial_seats) {
      if (s < 0 || s > 2 || seen[static_cast<std::size_t>(s)])
        throw std::invalid_argument("initial seats must be a permutation");
      seen[static_cast<std::size_t>(s)] = true;
    }
  }

  std::array<std::unique_ptr<Agent>, 3> agents;
  std::vector<Rng> rngs;
  rngs.reserve(3);
  for (int slot = 0; slot < 3; ++slot) {
    agents[static_cast<std::size_t>(slot)] = make_agent(
        spec.agents[static_cast<std::size_t>(slot)], mbbr,
        derive_seed(spec.seed, 0xA6E57u, static_cast<std::uint64_t>(slot)));
    rngs.emplace_back(derive_seed(spec.seed, 0xAC7u, static_cast<std::uint64_t>(slot)));
  }

  MatchResult result;
  result.hands = spec.hands;
  for (long t = 0; t < spec.hands; ++t) {
    std::array<int, 3> seat_of_slot{}, slot_of_seat{};
    for (int slot = 0; slot < 3; ++slot) {
      int seat = seat_at_hand(spec.initial_seats[static_cast<std::size_t>(slot)], t,
                              spec.rotate_seats);
      seat_of_slot[static_cast<std::size_t>(slot)] = seat;
      slot_of_seat[static_cast<std::size_t>(seat)] = slot;
    }
    const Deal& deal = schedule.deals[static_cast<std::size_t>(t)];
    for (int slot = 0; slot < 3; ++slot)
      agents[static_cast<std::size_t>(slot)]->begin_hand(
          seat_of_slot[static_cast<std::size_t>(slot)],
          deal[seat_of_slot[static_cast<std::size_t>(slot)]], t + 1);

    ActionSeq seq;
    SeqState st = analyze(seq);
    while (!st.terminal) {
      int seat = st.acting;
      int slot = slot_of_seat[static_cast<std::size_t>(seat)];
      int situation = st.bettor < 0 ? 0
                      : st.responses == 0 ? 1
                      : st.first_response_fold ? 2 : 3;
      InfoSetKey key{seat, deal[seat], situation};
      seq.push_back(agents[static_cast<std::size_t>(slot)]->act(key, rngs[static_cast<std::size_t>(slot)]));
      st = analyze(seq);
    }

    auto pay = payoff(deal, seq);
    for (int slot = 0; slot < 3; ++slot)
      result.chips[static_cast<std::size_t>(slot)] +=
          pay[static_cast<std::size_t>(seat_of_slot[static_cast<std::size_t>(slot)])];
    for (int slot = 0; slot < 3; ++slot)
      agents[static_cast<std::size_t>(slot)]->end_hand(
          observe(deal, seq, seat_of_slot[static_cast<std::size_t>(slot)]));
  }
  return result;
}

struct DuplicateSpec {
  std::array<std::string, 3> agents;
  long hands = 3000;
  std::uint64_t seed = 1;
  bool rotate_seats = true;
};

// All six assignments of the three slots to initial seats.
inline const std::array<std::array<int, 3>, 6>& seat_permutations() {
  static constexpr std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

struct DuplicateResult {
  std::array<long, 3> chips{};  // by slot, aggregated over the six matches
  long hands = 0;               // per match
  std::array<MatchResult, 6> matches{};

  double winrate_mchips(int slot) const {
    return hands == 0 ? 0.0
                      : 1000.0 * static_cast<double>(chips[static_cast<std::size_t>(slot)]) /
                            (6.0 * static_cast<double>(hands));
  }
};

// One duplicate set: six matches, one per seat permutation, all replaying
// the same deal schedule.
inline DuplicateResult run_duplicate_set(const DuplicateSpec& spec, const MbbrConfig& mbbr) {
  DealSchedule schedule = DealSchedule::random(derive_seed(spec.seed, 0xDEA15u), spec.hands);
  DuplicateResult out;
  out.hands = spec.hands;
  for (int p = 0; p < 6; ++p) {
    MatchSpec ms;
    ms.agents = spec.agents;
    ms.hands = spec.hands;
    ms.seed = derive_seed(spec.seed, 0x9A7C4u, static_cast<std::uint64_t>(p));
    ms.initial_seats = seat_permutations()[static_cast<std::size_t>(p)];
    ms.rotate_seats = spec.rotate_seats;
    out.matches[static_cast<std::size_t>(p)] = run_match(ms, schedule, mbbr);
    for (int slot = 0; slot < 3; ++slot)
      out.chips[static_cast<std::size_t>(slot)] +=
          out.matches[static_cast<std::size_t>(p)].chips[static_cast<std::size_t>(slot)];
  }
  return out;
}

// Mean and standard error over duplicate-set means. Sets are the independent
// unit; the six matches inside a set share deals and are not independent.
inline std::pair<double, double> winrate_stats(const std::vector<double>& per_set) {
  if (per_set.empty()) throw std::invalid_argument("no winrates to summarize");
  double mean = 0.0;
  for (double v : per_set) mean += v;
  mean /= static_cast<double>(per_set.size());
  if (per_set.size() < 2) return {mean, std::numeric_limits<double>::quiet_NaN()};
  double ss = 0.0;
  for (double v : per_set) ss += (v - mean) * (v - mean);
  double n = static_cast<double>(per_set.size());
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

struct TournamentConfig {
  std::vector<std::array<std::string, 3>> groupings;
  int sets_per_grouping = 10;
  long hands = 3000;
  std::uint64_t seed = 1;
  int threads = 1;
  bool rotate_seats = true;
};

struct GroupingRow {
  std::string agent;
  std::string grouping;
  double winrate = 0.0;    // millichips per hand, mean over sets
  double std_error = 0.0;  // across sets; NaN with fewer than two sets
  long hands = 0;          // hands this agent played in the grouping
  std::vector<double> per_set;
};

struct AgentStanding {
  std::string agent;
  double winrate = 0.0;
  double std_error = 0.0;
  long hands = 0;
  int sets = 0;
};

struct TournamentResult {
  std::vector<GroupingRow> rows;        // grouping-major, slot order within
  std::vector<AgentStanding> ranking;   // overall, winrate descending
  std::uint64_t seed = 0;
  long hands = 0;
  int sets_per_grouping = 0;

  const AgentStanding& standing(const std::string& agent) const {
    for (const auto& s : ranking)
      if (s.agent == agent) return s;
    throw std::invalid_argument("agent not in tournament: " + agent);
  }
};

inline std::string grouping_label(const std::array<std::string, 3>& g) {
  return g[0] + "+" + g[1] + "+" + g[2];
}

inline TournamentResult run_tournament(const TournamentConfig& cfg, const MbbrConfig& mbbr) {
  if (cfg.groupings.empty()) throw std::invalid_argument("tournament needs a grouping");
  if (cfg.sets_per_grouping < 1) throw std::invalid_argument("need at least one set");
  const int sets = cfg.sets_per_grouping;
  const int jobs = static_cast<int>(cfg.groupings.size()) * sets;
  std::vector<DuplicateResult> results(static_cast<std::size_t>(jobs));

  auto run_job = [&](int j) {
    int g = j / sets, i = j % sets;
    DuplicateSpec spec;
    spec.agents = cfg.groupings[static_cast<std::size_t>(g)];
    spec.hands = cfg.hands;
    spec.seed = derive_seed(cfg.seed, 0x7AB1Eu, static_cast<std::uint64_t>(g),
                            static_cast<std::uint64_t>(i));
    spec.rotate_seats = cfg.rotate_seats;
    results[static_cast<std::size_t>(j)] = run_duplicate_set(spec, mbbr);
  };

  int workers = std::min(cfg.threads, jobs);
  if (workers <= 1) {
    for (int j = 0; j < jobs; ++j) run_job(j);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int j = next.fetch_add(1); j < jobs; j = next.fetch_add(1)) run_job(j);
      });
    for (auto& th : pool) th.join();
  }

  TournamentResult out;
  out.seed = cfg.seed;
  out.hands = cfg.hands;
  out.sets_per_grouping = sets;
  std::map<std::string, std::vector<double>> overall;
  std::map<std::string, long> overall_hands;

  for (std::size_t g = 0; g < cfg.groupings.size(); ++g) {
    const auto& grouping = cfg.groupings[g];
    std::vector<std::string> agents;
    for (const auto& name : grouping)
      if (std::find(agents.begin(), agents.end(), name) == agents.end())
        agents.push_back(name);
    for (const auto& name : agents) {
      long slots = 0;
      for (const auto& n : grouping) slots += n == name ? 1 : 0;
      GroupingRow row;
      row.agent = name;
      row.grouping = grouping_label(grouping);
      row.hands = static_cast<long>(sets) * 6 * cfg.hands * slots;
      for (int i = 0; i < sets; ++i) {
        const auto& dup = results[g * static_cast<std::size_t>(sets) + static_cast<std::size_t>(i)];
        long chips = 0;
        for (int slot = 0; slot < 3; ++slot)
          if (grouping[static_cast<std::size_t>(slot)] == name)
            chips += dup.chips[static_cast<std::size_t>(slot)];
        row.per_set.push_back(1000.0 * static_cast<double>(chips) /
                              (6.0 * static_cast<double>(cfg.hands) * static_cast<double>(slots)));
      }
      auto [mean, se] = winrate_stats(row.per_set);
      row.winrate = mean;
      row.std_error = se;
      auto& all = overall[name];
      all.insert(all.end(), row.per_set.begin(), row.per_set.end());
      overall_hands[name] += row.hands;
      out.rows.push_back(std::move(row));
    }
  }

  for (const auto& [name, per_set] : overall) {
    auto [mean, se] = winrate_stats(per_set);
    out.ranking.push_back(
        {name, mean, se, overall_hands[name], static_cast<int>(per_set.size())});
  }
  std::sort(out.ranking.begin(), out.ranking.end(), [](const auto& a, const auto& b) {
    return a.winrate != b.winrate ? a.winrate > b.winrate : a.agent < b.agent;
  });
  return out;
}

enum class SweepParam { Epsilon, SwitchHand, Eta, Samples };

inline std::string_view to_string(SweepParam p) {
  switch (p) {
    case SweepParam::Epsilon: return "epsilon";
    case SweepParam::SwitchHand: return "H";
    case SweepParam::Eta: return "eta";
    case SweepParam::Samples: return "k";
  }
  throw std::invalid_argument("bad sweep parameter");
}

inline SweepParam sweep_param_from_string(std::string_view name) {
  if (name == "epsilon") return SweepParam::Epsilon;
  if (name == "H" || name == "h") return SweepParam::SwitchHand;
  if (name == "eta") return SweepParam::Eta;
  if (name == "k") return SweepParam::Samples;
  throw std::invalid_argument("unknown sweep parameter: " + std::string(name));
}

struct SweepRow {
  double value = 0.0;
  double winrate = 0.0;
  double std_error = 0.0;
};

// Reruns the tournament for each parameter value and reports the target
// agent's standing. The tournament seed is shared across values, so every
// value faces identical deal schedules.
inline std::vector<SweepRow> run_sweep(SweepParam param, const std::vector<double>& values,
                                       const TournamentConfig& base, const MbbrConfig& mbbr_base,
                                       const std::string& target = "mbbr") {
  if (values.empty()) throw std::invalid_argument("sweep needs at least one value");
  std::vector<SweepRow> out;
  for (double value : values) {
    MbbrConfig mbbr = mbbr_base;
    switch (param) {
      case SweepParam::Epsilon: mbbr.epsilon = value; break;
      case SweepParam::SwitchHand: mbbr.switch_hand = static_cast<long>(value); break;
      case SweepParam::Eta: mbbr.eta = value; break;
      case SweepParam::Samples: mbbr.k = static_cast<int>(value); break;
    }
    TournamentResult result = run_tournament(base, mbbr);
    const auto& standing = result.standing(target);
    out.push_back({value, standing.winrate, standing.std_error});
  }
  return out;
}

// CSV emission. Winrates use four decimals; a missing standard error (fewer
// than two sets) prints as "na".
inline void write_tournament_csv(std::ostream& out, const TournamentResult& result) {
  out << "agent,grouping,winrate_mchips,stderr_mchips,hands,seed\n";
  char buf[64];
  for (const auto& row : result.rows) {
    std::snprintf(buf, sizeof buf, "%.4f", row.winrate);
    out << row.agent << ',' << row.grouping << ',' << buf << ',';
    if (std::isnan(row.std_error)) {
      out << "na";
    } else {
      std::snprintf(buf, sizeof buf, "%.4f", row.std_error);
      out << buf;
    }
    out << ',' << row.hands << ',' << result.seed << '\n';
  }
}

inline void write_sweep_csv(std::ostream& out, SweepParam param,
                            const std::vector<SweepRow>& rows) {
  out << "param,value,winrate_mchips,stderr_mchips\n";
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%g", row.value);
    out << to_string(param) << ',' << buf << ',';
    std::snprintf(buf, sizeof buf, "%.4f", row.winrate);
    out << buf << ',';
    if (std::isnan(row.std_error)) {
      out << "na";
    } else {
      std::snprintf(buf, sizeof buf, "%.4f", row.std_error);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace kuhn
