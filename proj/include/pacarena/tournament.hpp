#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pacarena/glicko2.hpp"
#include "pacarena/match.hpp"

namespace pacarena {

struct PairStats {
  std::string pacman;
  std::string ghosts;
  int n = 0;
  double mean = 0.0;
  double se = 0.0;  // sample standard deviation / sqrt(n)
  double min_score = 0.0;
  double max_score = 0.0;
  bool insufficient_n = false;  // n == 1: SE is 0 by convention
};

PairStats compute_stats(const std::string& pacman, const std::string& ghosts,
                        const std::vector<MatchResult>& results);

struct SeriesOptions {
  int games = 1;
  std::uint64_t base_seed = 1;
  int workers = 1;
  bool enforce_budget = false;
  // Optional per-game replay sink factory, keyed by seed. Must be safe to
  // use from worker threads (each game gets its own sink).
  std::function<ReplaySink(std::uint64_t seed)> sink_factory;
};

struct SeriesOutput {
  PairStats stats;
  std::vector<MatchResult> results;  // ordered by seed
};

// Seeds base..base+N-1, deterministic regardless of worker count.
SeriesOutput run_series(const std::string& pacman, const std::string& ghosts,
                        const std::vector<MazeGraph>& mazes, const RuleConfig& config,
                        const SeriesOptions& opt);

struct RoundRobinResult {
  std::vector<std::string> pacmen;
  std::vector<std::string> teams;
  std::vector<PairStats> cells;  // pacmen x teams, row-major
  const PairStats& cell(size_t p, size_t t) const { return cells[p * teams.size() + t]; }

  // Mean over every game an entrant played.
  double pacman_mean(size_t p) const;
  double team_conceded_mean(size_t t) const;
  // Pacmen by mean descending; ghost teams by conceded mean ascending.
  std::vector<std::string> pacman_ranking() const;
  std::vector<std::string> team_ranking() const;
};

// Every pairing plays exactly `games` games on the same seed block.
// Duplicate entrant names are an error.
RoundRobinResult round_robin(const std::vector<std::string>& pacmen,
                             const std::vector<std::string>& teams,
                             const std::vector<MazeGraph>& mazes, const RuleConfig& config,
                             const SeriesOptions& opt);

struct PairwiseOutcome {
  std::string a;
  std::string b;
  double score_for_a = 0.0;  // 1 / 0.5 / 0, one entry per common opponent
};

// Same-track pairwise outcomes: for each common opponent, the entrant with
// the better mean takes a win (higher for pacmen, lower conceded for
// teams); equal means draw.
std::vector<PairwiseOutcome> derive_outcomes(const RoundRobinResult& rr, bool pacman_track);

// One Glicko-2 rating period over the derived outcomes, all entrants
// starting from the default rating.
std::map<std::string, Rating> rate_entrants(const RoundRobinResult& rr, bool pacman_track,
                                            double tau = 0.5);

struct SweepPoint {
  int threshold = 0;
  int n = 0;
  double mean = 0.0;
  double se = 0.0;
};

// One run_series per threshold with POGC's memory threshold overridden;
// `opponent` is the pacman controller (COP or POP in the reference setup).
std::vector<SweepPoint> threshold_sweep(const std::vector<int>& thresholds,
                                        const std::string& opponent,
                                        const std::vector<MazeGraph>& mazes,
                                        const RuleConfig& config, const SeriesOptions& opt);

}  // namespace pacarena
