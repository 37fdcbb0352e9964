// Command-line front end: run match series, round-robin tournaments,
// POGC threshold sweeps, and replay verification.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pacarena/tournament.hpp"

using namespace pacarena;

namespace {

struct CommonOpts {
  std::vector<std::string> maze_paths;
  std::string config_path;
  std::vector<std::string> overrides;  // key=value, applied after the config file
  std::uint64_t seed = 1;
  int workers = 1;
  bool enforce_budget = false;
  bool no_timestamp = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_maze = true) {
  auto* maze = cmd->add_option("--maze", o.maze_paths, "maze file (repeatable; levels cycle)");
  if (needs_maze) maze->required();
  cmd->add_option("--config", o.config_path,
                  "rule config file (default: $PACARENA_CONFIG if set)");
  cmd->add_option("--set", o.overrides, "override a config key, e.g. --set po.model=full");
  cmd->add_option("--seed", o.seed, "base seed");
  cmd->add_option("--workers", o.workers, "max concurrent matches")->check(CLI::PositiveNumber);
  cmd->add_flag("--enforce-budget", o.enforce_budget,
                "enforce the shared 40ms ghost budget (timing-dependent)");
  cmd->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp header in output files");
}

RuleConfig load_config(const CommonOpts& o) {
  RuleConfig cfg;
  std::string path = o.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("PACARENA_CONFIG")) path = env;
  }
  if (!path.empty()) cfg = load_rule_config_file(path);
  for (const auto& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    apply_config_entry(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  return cfg;
}

std::vector<MazeGraph> load_mazes(const CommonOpts& o) {
  std::vector<MazeGraph> mazes;
  for (const auto& p : o.maze_paths) mazes.push_back(load_maze_file(p));
  return mazes;
}

std::ofstream open_out(const std::string& path, bool no_timestamp) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  if (!no_timestamp) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    out << "# generated " << buf << "\n";
  }
  return out;
}

std::string fmt(double x, int prec = 2) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(prec) << x;
  return s.str();
}

void write_results_csv(std::ostream& out, const std::vector<MatchResult>& results) {
  out << "pacman,ghosts,seed,score,levels,ticks\n";
  for (const auto& r : results)
    out << r.pacman << ',' << r.ghosts << ',' << r.seed << ',' << r.score << ',' << r.levels
        << ',' << r.ticks << '\n';
}

void write_stats_row(std::ostream& out, const PairStats& st) {
  out << st.pacman << ',' << st.ghosts << ',' << st.n << ',' << fmt(st.mean) << ','
      << fmt(st.se) << ',' << fmt(st.min_score, 0) << ',' << fmt(st.max_score, 0) << '\n';
}

int cmd_run(const CommonOpts& common, const std::string& pacman, const std::string& ghosts,
            int games, const std::string& out_path, const std::string& replay_path) {
  const RuleConfig cfg = load_config(common);
  const std::vector<MazeGraph> mazes = load_mazes(common);

  if (!replay_path.empty() && games != 1)
    throw ConfigError("--replay requires --games 1");

  std::ofstream replay_file;
  SeriesOptions opt;
  opt.games = games;
  opt.base_seed = common.seed;
  opt.workers = common.workers;
  opt.enforce_budget = common.enforce_budget;
  if (!replay_path.empty()) {
    replay_file.open(replay_path);
    if (!replay_file) throw ConfigError("cannot open replay file: " + replay_path);
    opt.sink_factory = [&replay_file](std::uint64_t) {
      return [&replay_file](const std::string& line) { replay_file << line << '\n'; };
    };
    opt.workers = 1;
  }

  const SeriesOutput series = run_series(pacman, ghosts, mazes, cfg, opt);

  if (!out_path.empty()) {
    auto out = open_out(out_path, common.no_timestamp);
    write_results_csv(out, series.results);
  } else {
    write_results_csv(std::cout, series.results);
  }
  std::cerr << pacman << " vs " << ghosts << ": n=" << series.stats.n << " mean="
            << fmt(series.stats.mean) << " stderr=" << fmt(series.stats.se)
            << (series.stats.insufficient_n ? " (insufficient N)" : "") << "\n";
  return 0;
}

int cmd_tournament(const CommonOpts& common, const std::string& pacmen_csv,
                   const std::string& teams_csv, int games, const std::string& stats_path,
                   const std::string& ratings_path) {
  const RuleConfig cfg = load_config(common);
  const std::vector<MazeGraph> mazes = load_mazes(common);

  auto split_names = [](const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) out.push_back(tok);
    return out;
  };

  SeriesOptions opt;
  opt.games = games;
  opt.base_seed = common.seed;
  opt.workers = common.workers;
  opt.enforce_budget = common.enforce_budget;

  const RoundRobinResult rr =
      round_robin(split_names(pacmen_csv), split_names(teams_csv), mazes, cfg, opt);

  {
    auto out = stats_path.empty() ? std::ofstream() : open_out(stats_path, common.no_timestamp);
    std::ostream& os = stats_path.empty() ? std::cout : out;
    os << "pacman,ghosts,n,mean,stderr,min,max\n";
    for (const auto& c : rr.cells) write_stats_row(os, c);
  }

  const auto pac_ratings = rate_entrants(rr, true);
  const auto team_ratings = rate_entrants(rr, false);
  if (!ratings_path.empty()) {
    auto out = open_out(ratings_path, common.no_timestamp);
    out << "entrant,track,rating,rd,sigma\n";
    for (const auto& [name, r] : pac_ratings)
      out << name << ",pacman," << fmt(r.r) << ',' << fmt(r.rd) << ',' << fmt(r.sigma, 6) << '\n';
    for (const auto& [name, r] : team_ratings)
      out << name << ",ghosts," << fmt(r.r) << ',' << fmt(r.rd) << ',' << fmt(r.sigma, 6) << '\n';
  }

  std::cerr << "pacman ranking:";
  for (const auto& n : rr.pacman_ranking()) std::cerr << ' ' << n;
  std::cerr << "\nghost-team ranking:";
  for (const auto& n : rr.team_ranking()) std::cerr << ' ' << n;
  std::cerr << "\n";
  return 0;
}

int cmd_sweep(const CommonOpts& common, const std::string& param, int from, int to, int step,
              int games, const std::string& vs, const std::string& out_path) {
  if (param != "pogc.threshold")
    throw ConfigError("sweep supports --param pogc.threshold only, got '" + param + "'");
  if (step <= 0) throw ConfigError("sweep: --step must be positive");
  if (to < from) throw ConfigError("sweep: --to must be >= --from");
  if (step > to - from) throw ConfigError("sweep: step exceeds the sweep range");

  const RuleConfig cfg = load_config(common);
  const std::vector<MazeGraph> mazes = load_mazes(common);

  std::vector<int> thresholds;
  for (int t = from; t <= to; t += step) thresholds.push_back(t);

  SeriesOptions opt;
  opt.games = games;
  opt.base_seed = common.seed;
  opt.workers = common.workers;
  opt.enforce_budget = common.enforce_budget;

  const auto points = threshold_sweep(thresholds, vs, mazes, cfg, opt);

  auto out = out_path.empty() ? std::ofstream() : open_out(out_path, common.no_timestamp);
  std::ostream& os = out_path.empty() ? std::cout : out;
  os << "threshold,n,mean,stderr\n";
  for (const auto& p : points) {
    os << p.threshold << ',' << p.n << ',' << fmt(p.mean) << ',' << fmt(p.se);
    if (p.n < 2) os << ",insufficient_n";
    os << '\n';
  }
  return 0;
}

int cmd_replay(const CommonOpts& common, const std::string& in_path) {
  const RuleConfig cfg = load_config(common);
  const std::vector<MazeGraph> mazes = load_mazes(common);

  std::ifstream in(in_path);
  if (!in) throw ConfigError("cannot open replay file: " + in_path);
  std::stringstream buf;
  buf << in.rdbuf();

  const ReplayDoc doc = parse_replay(buf.str());
  const ReplayVerification v = verify_replay(doc, mazes, cfg);
  if (v.ok) {
    std::cout << "OK, score=" << v.final_score << "\n";
    return 0;
  }
  std::cout << v.message << "\n";
  return v.rejected ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pacarena: partially observable pacman-vs-ghost-team arena"};
  app.require_subcommand(1);

  CommonOpts run_common, tour_common, sweep_common, replay_common;

  auto* run = app.add_subcommand("run", "play a seeded series of one pairing");
  std::string run_pacman = "COP", run_ghosts = "COG", run_out, run_replay;
  int run_games = 1;
  run->add_option("--pacman", run_pacman, "pacman controller name")->required();
  run->add_option("--ghosts", run_ghosts, "ghost team name")->required();
  run->add_option("--games", run_games, "number of games")->check(CLI::PositiveNumber);
  run->add_option("--out", run_out, "results CSV path (stdout if omitted)");
  run->add_option("--replay", run_replay, "write a replay (requires --games 1)");
  add_common(run, run_common);

  auto* tour = app.add_subcommand("tournament", "cross-paired round robin with ratings");
  std::string tour_pacmen, tour_teams, tour_stats, tour_ratings;
  int tour_games = 1;
  tour->add_option("--pacmen", tour_pacmen, "comma-separated pacman entrants")->required();
  tour->add_option("--ghostteams", tour_teams, "comma-separated ghost-team entrants")->required();
  tour->add_option("--games", tour_games, "games per pairing")->check(CLI::PositiveNumber);
  tour->add_option("--out-stats", tour_stats, "per-pairing stats CSV (stdout if omitted)");
  tour->add_option("--out-ratings", tour_ratings, "ratings CSV");
  add_common(tour, tour_common);

  auto* sweep = app.add_subcommand("sweep", "POGC tick-threshold sweep");
  std::string sweep_param = "pogc.threshold", sweep_vs = "COP", sweep_out;
  int sweep_from = 0, sweep_to = 200, sweep_step = 10, sweep_games = 1;
  sweep->add_option("--param", sweep_param, "swept parameter (pogc.threshold)");
  sweep->add_option("--from", sweep_from, "first value");
  sweep->add_option("--to", sweep_to, "last value");
  sweep->add_option("--step", sweep_step, "increment");
  sweep->add_option("--games", sweep_games, "games per point")->check(CLI::PositiveNumber);
  sweep->add_option("--vs", sweep_vs, "opposing pacman controller");
  sweep->add_option("--out", sweep_out, "sweep CSV (stdout if omitted)");
  add_common(sweep, sweep_common);

  auto* replay = app.add_subcommand("replay", "verify a recorded replay");
  std::string replay_in;
  replay->add_option("--in", replay_in, "replay file")->required();
  add_common(replay, replay_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (run->parsed())
      return cmd_run(run_common, run_pacman, run_ghosts, run_games, run_out, run_replay);
    if (tour->parsed())
      return cmd_tournament(tour_common, tour_pacmen, tour_teams, tour_games, tour_stats,
                            tour_ratings);
    if (sweep->parsed())
      return cmd_sweep(sweep_common, sweep_param, sweep_from, sweep_to, sweep_step, sweep_games,
                       sweep_vs, sweep_out);
    if (replay->parsed()) return cmd_replay(replay_common, replay_in);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const MazeParseError& e) {
    std::cerr << "maze error: " << e.what() << "\n";
    for (const auto& issue : e.issues()) std::cerr << "  " << issue << "\n";
    return 2;
  } catch (const ReplayParseError& e) {
    std::cerr << "replay error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
