#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pacarena/controllers.hpp"
#include "pacarena/replay.hpp"

namespace pacarena {

struct MatchResult {
  std::string pacman;
  std::string ghosts;
  std::uint64_t seed = 0;
  int score = 0;
  int levels = 0;  // level transitions, forced ones included
  long ticks = 0;
  int overruns = 0;
};

struct MatchSpec {
  const std::vector<MazeGraph>* mazes = nullptr;
  RuleConfig config;
  std::string pacman_name;
  std::string ghosts_name;
  std::uint64_t seed = 0;
  bool enforce_budget = false;
  // Receives the replay header block, then one line per tick.
  ReplaySink sink;
  // Prebuilt per-maze visibility (shared across a series); built locally
  // when absent.
  const std::vector<VisibilityIndex>* visibility = nullptr;
};

// Per-maze index for the configured model; series runners build this once.
std::vector<VisibilityIndex> build_visibility(const std::vector<MazeGraph>& mazes,
                                              const VisibilityModel& model);

MatchResult play_match(const MatchSpec& spec);

}  // namespace pacarena
