#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacarena/maze.hpp"

namespace pacarena {

enum class VisModelKind : std::uint8_t { Full, Los, ForwardLos, Radius };

struct VisibilityModel {
  VisModelKind kind = VisModelKind::Los;
  // Sight range in cells for the LOS kinds; 0 = auto, one more than the
  // longest corridor of the maze in play.
  int range = 0;
  DistanceMetric metric = DistanceMetric::Euclidean;  // for Radius
  double d = 5.0;                                     // for Radius

  static VisibilityModel full() { return {VisModelKind::Full, 0, DistanceMetric::Euclidean, 0}; }
  static VisibilityModel los(int range = 0) {
    return {VisModelKind::Los, range, DistanceMetric::Euclidean, 0};
  }
  static VisibilityModel forward_los(int range = 0) {
    return {VisModelKind::ForwardLos, range, DistanceMetric::Euclidean, 0};
  }
  static VisibilityModel radius(DistanceMetric m, double d) {
    return {VisModelKind::Radius, 0, m, d};
  }
};

struct MessagingConfig {
  int delta_c = 1;                     // constant delay
  int delta_x = 1;                     // multiplier on the per-type delay
  std::array<int, 3> delta_m{0, 0, 0};  // per message type, indexed by MessageType
};

// Every tunable of a match, read from a flat key=value file ('#' comments).
// Unknown keys are errors.
struct RuleConfig {
  int lives = 3;
  int pill_score = 10;
  int power_pill_score = 50;
  int ghost_score_base = 200;      // doubles per ghost up to 1600
  int edible_duration = 200;       // ticks at level 1
  double edible_level_factor = 0.9;  // per-level multiplier, floored
  int lair_wait = 40;              // ticks an eaten ghost waits
  std::array<int, 4> lair_exit{0, 10, 20, 30};  // initial stagger Blinky..Sue
  int level_tick_limit = 4000;     // force-advance, no bonus
  int max_levels = 16;

  VisibilityModel po;
  MessagingConfig msg;

  int ctrl_ppill_proximity = 15;   // "close to power pill" radius
  int pogc_threshold = 50;         // POGC memory staleness, ticks
  int budget_ms = 40;              // shared ghost-team budget per tick

  int edible_duration_for_level(int level) const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RuleConfig parse_rule_config(const std::string& text);
RuleConfig load_rule_config_file(const std::string& path);
// Apply one "key=value" assignment (CLI overrides reuse the parser).
void apply_config_entry(RuleConfig& cfg, const std::string& key, const std::string& value);

// Sorted key=value rendering; the basis of replay config hashes.
std::string canonical_config_text(const RuleConfig& cfg);

// FNV-1a over the canonical config text plus every maze's canonical text, so
// a replay refuses to run against a different ruleset or layout.
std::uint64_t config_hash(const RuleConfig& cfg, const std::vector<MazeGraph>& mazes);

}  // namespace pacarena
