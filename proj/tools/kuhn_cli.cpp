// Command-line front end: equilibrium verification, seeded matches,
// tournaments, parameter sweeps and deal-schedule export.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "kuhn/harness.hpp"
#include "kuhn/report.hpp"

using namespace kuhn;

namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  bool seed_set = false;
  long hands = 3000;
  int matches = 10;  // duplicate sets per grouping
  double epsilon = 0.05;
  int k = 10;
  long switch_h = 100;
  double eta = 4.0;
  std::string prior = "informed";
  std::string default_strategy = "lower";
  std::string prior_mean = "mid";
  int threads = 1;
  std::string out;
};

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.contains("seed")) {
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.seed_set = true;
  }
  if (j.contains("hands")) cfg.hands = j.at("hands").get<long>();
  if (j.contains("matches")) cfg.matches = j.at("matches").get<int>();
  if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
  if (j.contains("k")) cfg.k = j.at("k").get<int>();
  if (j.contains("switch_h")) cfg.switch_h = j.at("switch_h").get<long>();
  if (j.contains("eta")) cfg.eta = j.at("eta").get<double>();
  if (j.contains("prior")) cfg.prior = j.at("prior").get<std::string>();
  if (j.contains("default_strategy"))
    cfg.default_strategy = j.at("default_strategy").get<std::string>();
  if (j.contains("prior_mean")) cfg.prior_mean = j.at("prior_mean").get<std::string>();
  if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
  if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
}

MbbrConfig mbbr_config(const RunConfig& cfg) {
  MbbrConfig m;
  m.epsilon = cfg.epsilon;
  m.k = cfg.k;
  m.switch_hand = cfg.switch_h;
  m.eta = cfg.eta;
  if (cfg.prior == "informed")
    m.prior_mode = PriorMode::Informed;
  else if (cfg.prior == "uniform2")
    m.prior_mode = PriorMode::Uniform2;
  else
    throw CLI::ValidationError("--prior", "expected informed or uniform2");
  m.default_profile = nash_profile(family_point_from_string(cfg.default_strategy));
  m.prior_mean = nash_profile(family_point_from_string(cfg.prior_mean));
  return m;
}

std::uint64_t ensure_seed(RunConfig& cfg) {
  if (!cfg.seed_set) {
    cfg.seed = std::random_device{}();
    cfg.seed_set = true;
    std::fprintf(stderr, "seed: %llu\n", static_cast<unsigned long long>(cfg.seed));
  }
  return cfg.seed;
}

std::array<std::string, 3> parse_grouping(const std::string& csv) {
  std::array<std::string, 3> agents;
  std::stringstream ss(csv);
  std::string token;
  int n = 0;
  while (std::getline(ss, token, ',')) {
    if (n == 3) throw CLI::ValidationError("grouping", "expected three agents: " + csv);
    agents[static_cast<std::size_t>(n++)] = token;
  }
  if (n != 3) throw CLI::ValidationError("grouping", "expected three agents: " + csv);
  return agents;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("--out", "cannot write " + path);
  return out;
}

void print_ranking(const TournamentResult& result) {
  std::printf("%-4s %-18s %12s %10s %12s %6s\n", "rank", "agent", "winrate", "stderr",
              "hands", "sets");
  int rank = 1;
  for (const auto& s : result.ranking) {
    if (std::isnan(s.std_error))
      std::printf("%-4d %-18s %12.4f %10s %12ld %6d\n", rank++, s.agent.c_str(), s.winrate,
                  "na", s.hands, s.sets);
    else
      std::printf("%-4d %-18s %12.4f %10.4f %12ld %6d\n", rank++, s.agent.c_str(),
                  s.winrate, s.std_error, s.hands, s.sets);
  }
}

int cmd_verify_nash(const std::string& point, const std::string& file) {
  std::vector<std::pair<std::string, StrategyProfile>> profiles;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::fprintf(stderr, "cannot open %s\n", file.c_str());
      return 2;
    }
    profiles.emplace_back(file, parse_profile(in));
  } else if (point == "all") {
    for (FamilyPoint p : {FamilyPoint::Lower, FamilyPoint::Mid, FamilyPoint::Upper})
      profiles.emplace_back("nash-" + std::string(to_string(p)), nash_profile(p));
  } else {
    FamilyPoint p = family_point_from_string(point);
    profiles.emplace_back("nash-" + std::string(to_string(p)), nash_profile(p));
  }

  bool ok = true;
  for (const auto& [name, profile] : profiles) {
    auto gains = exploitability(profile);
    double worst = std::max({gains[0], gains[1], gains[2]});
    ok = ok && worst <= 1e-9;
    std::printf("%-18s gains %.3e %.3e %.3e  max %.3e  %s\n", name.c_str(), gains[0],
                gains[1], gains[2], worst, worst <= 1e-9 ? "ok" : "NOT AN EQUILIBRIUM");
  }
  return ok ? 0 : 1;
}

int cmd_match(RunConfig& cfg, const std::string& agents_csv) {
  DuplicateSpec spec;
  spec.agents = parse_grouping(agents_csv);
  spec.hands = cfg.hands;
  spec.seed = ensure_seed(cfg);
  DuplicateResult dup = run_duplicate_set(spec, mbbr_config(cfg));

  std::printf("duplicate set: %ld hands x 6 permutations, seed %llu\n", dup.hands,
              static_cast<unsigned long long>(spec.seed));
  for (int slot = 0; slot < 3; ++slot)
    std::printf("%-18s %+8ld chips  %10.4f mchips/hand\n",
                spec.agents[static_cast<std::size_t>(slot)].c_str(),
                dup.chips[static_cast<std::size_t>(slot)], dup.winrate_mchips(slot));
  std::printf("per permutation (chips by slot):\n");
  for (int p = 0; p < 6; ++p) {
    const auto& perm = seat_permutations()[static_cast<std::size_t>(p)];
    const auto& m = dup.matches[static_cast<std::size_t>(p)];
    std::printf("  seats %d%d%d: %+6ld %+6ld %+6ld\n", perm[0] + 1, perm[1] + 1,
                perm[2] + 1, m.chips[0], m.chips[1], m.chips[2]);
  }
  return 0;
}

int cmd_tournament(RunConfig& cfg, const std::vector<std::string>& groupings_csv,
                   const std::string& json_path) {
  TournamentConfig tc;
  for (const auto& g : groupings_csv) tc.groupings.push_back(parse_grouping(g));
  tc.sets_per_grouping = cfg.matches;
  tc.hands = cfg.hands;
  tc.seed = ensure_seed(cfg);
  tc.threads = cfg.threads;
  TournamentResult result = run_tournament(tc, mbbr_config(cfg));

  print_ranking(result);
  if (!cfg.out.empty()) {
    auto out = open_out(cfg.out);
    write_tournament_csv(out, result);
    std::fprintf(stderr, "wrote %s\n", cfg.out.c_str());
  }
  if (!json_path.empty()) {
    auto out = open_out(json_path);
    out << tournament_json(result).dump(2) << '\n';
    std::fprintf(stderr, "wrote %s\n", json_path.c_str());
  }
  return 0;
}

int cmd_sweep(RunConfig& cfg, const std::string& param, const std::vector<double>& values,
              const std::string& grouping_csv) {
  TournamentConfig tc;
  tc.groupings = {parse_grouping(grouping_csv)};
  tc.sets_per_grouping = cfg.matches;
  tc.hands = cfg.hands;
  tc.seed = ensure_seed(cfg);
  tc.threads = cfg.threads;

  SweepParam sp = sweep_param_from_string(param);
  auto rows = run_sweep(sp, values, tc, mbbr_config(cfg));
  std::ostringstream csv;
  write_sweep_csv(csv, sp, rows);
  if (!cfg.out.empty()) {
    auto out = open_out(cfg.out);
    out << csv.str();
    std::fprintf(stderr, "wrote %s\n", cfg.out.c_str());
  } else {
    std::fputs(csv.str().c_str(), stdout);
  }
  return 0;
}

int cmd_export_deals(RunConfig& cfg, const std::string& path) {
  DealSchedule schedule = DealSchedule::random(ensure_seed(cfg), cfg.hands);
  if (path == "-") {
    schedule.save(std::cout);
  } else {
    auto out = open_out(path);
    schedule.save(out);
    std::fprintf(stderr, "wrote %ld deals to %s\n",
                 static_cast<long>(schedule.deals.size()), path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;

  // a config file provides defaults; explicit flags override it
  {
    CLI::App pre;
    pre.allow_extras();
    std::string config_path;
    pre.add_option("--config", config_path);
    pre.set_help_flag();
    try {
      pre.parse(argc, argv);
    } catch (const CLI::ParseError&) {
    }
    if (!config_path.empty()) {
      try {
        load_config_file(config_path, cfg);
      } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
      }
    }
  }

  CLI::App app{"three-player Kuhn poker: Bayesian opponent modeling workbench"};
  app.require_subcommand(1);
  std::string config_path_seen;  // consumed by the pre-parse above
  app.add_option("--config", config_path_seen,
                 "JSON config file with RunConfig fields (flags override)");

  auto add_common = [&cfg, &config_path_seen](CLI::App* cmd, bool with_threads = true) {
    cmd->add_option("--config", config_path_seen,
                    "JSON config file with RunConfig fields (flags override)");
    auto* seed = cmd->add_option("--seed", cfg.seed, "run seed (derived from entropy if omitted)");
    seed->each([&cfg](const std::string&) { cfg.seed_set = true; });
    cmd->add_option("--hands", cfg.hands, "hands per match")->capture_default_str();
    cmd->add_option("--matches", cfg.matches, "duplicate sets per grouping")
        ->capture_default_str();
    cmd->add_option("--epsilon", cfg.epsilon, "prior rounding floor")->capture_default_str();
    cmd->add_option("--k", cfg.k, "samples per opponent model")->capture_default_str();
    cmd->add_option("--switch-h", cfg.switch_h, "hands before exploitation starts")
        ->capture_default_str();
    cmd->add_option("--eta", cfg.eta, "Dirichlet concentration multiplier")
        ->capture_default_str();
    cmd->add_option("--prior", cfg.prior, "prior mode: informed|uniform2")
        ->capture_default_str();
    cmd->add_option("--default-strategy", cfg.default_strategy,
                    "default equilibrium: lower|mid|upper")
        ->capture_default_str();
    cmd->add_option("--prior-mean", cfg.prior_mean, "prior mean equilibrium: lower|mid|upper")
        ->capture_default_str();
    cmd->add_option("--out", cfg.out, "output path");
    if (with_threads)
      cmd->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
  };

  // verify-nash
  auto* verify = app.add_subcommand("verify-nash", "check equilibria against exact best response");
  std::string point = "all";
  std::string strategy_file;
  verify->add_option("point", point, "lower|mid|upper (or n1|n3|n2), default all");
  verify->add_flag_callback("--all", [&point] { point = "all"; }, "verify all three points");
  verify->add_option("--file", strategy_file, "verify a strategy profile file instead");

  // match
  auto* match = app.add_subcommand("match", "run one duplicate set of six permutation matches");
  std::string agents_csv = "mbbr,nash-lower,calling-station";
  match->add_option("--agents", agents_csv, "three comma-separated agents")
      ->capture_default_str();
  add_common(match, false);

  // tournament
  auto* tournament = app.add_subcommand("tournament", "round-robin groupings with duplicate sets");
  std::vector<std::string> groupings_csv;
  std::string json_path;
  tournament->add_option("--grouping", groupings_csv, "three comma-separated agents (repeatable)")
      ->required();
  tournament->add_option("--json", json_path, "also write a JSON summary");
  add_common(tournament);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "rerun a tournament across one parameter");
  std::string param;
  std::vector<double> values;
  std::string sweep_grouping = "mbbr,calling-station,calling-station";
  sweep->add_option("--param", param, "epsilon|H|eta|k")->required();
  sweep->add_option("--values", values, "comma-separated values")->required()->delimiter(',');
  sweep->add_option("--grouping", sweep_grouping, "grouping containing mbbr")
      ->capture_default_str();
  add_common(sweep);

  // export-deals
  auto* export_deals = app.add_subcommand("export-deals", "write a seeded deal schedule");
  std::string deals_path = "-";
  export_deals->add_option("--out", deals_path, "output file, - for stdout")
      ->capture_default_str();
  export_deals->add_option("--hands", cfg.hands, "number of deals")->capture_default_str();
  auto* ds = export_deals->add_option("--seed", cfg.seed, "schedule seed");
  ds->each([&cfg](const std::string&) { cfg.seed_set = true; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) return cmd_verify_nash(point, strategy_file);
    if (app.got_subcommand(match)) return cmd_match(cfg, agents_csv);
    if (app.got_subcommand(tournament)) return cmd_tournament(cfg, groupings_csv, json_path);
    if (app.got_subcommand(sweep)) return cmd_sweep(cfg, param, values, sweep_grouping);
    if (app.got_subcommand(export_deals)) return cmd_export_deals(cfg, deals_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
