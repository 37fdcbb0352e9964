#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pacarena/config.hpp"
#include "pacarena/direction.hpp"
#include "pacarena/maze.hpp"

namespace pacarena {

enum class GhostIdentity : std::uint8_t { Blinky = 0, Pinky = 1, Inky = 2, Sue = 3 };

// Fixed polling order.
inline constexpr std::array<GhostIdentity, 4> kGhostOrder = {
    GhostIdentity::Blinky, GhostIdentity::Pinky, GhostIdentity::Inky, GhostIdentity::Sue};

std::string_view ghost_name(GhostIdentity g);

struct GameEvent {
  enum class Kind : std::uint8_t {
    PillEaten,
    PowerPillEaten,
    GhostEaten,
    PacmanEaten,
    LevelCleared,
    GameOver,
  };
  Kind kind;
  long tick = 0;
  GhostIdentity ghost = GhostIdentity::Blinky;  // GhostEaten only
  int points = 0;                               // scoring events
};

struct GhostState {
  int node = -1;
  Direction last_dir = Direction::Neutral;
  int edible_ticks = 0;
  int lair_ticks = 0;      // wait before the exit walk starts
  bool just_exited = false;  // stepped onto the open board this tick
};

struct MoveSet {
  Direction pacman = Direction::Neutral;
  std::array<Direction, 4> ghosts{Direction::Neutral, Direction::Neutral, Direction::Neutral,
                                  Direction::Neutral};
};

struct GameState {
  const std::vector<MazeGraph>* mazes = nullptr;
  RuleConfig config;
  std::uint64_t seed = 0;

  long tick = 0;
  int level = 1;  // 1-based
  int score = 0;
  int lives = 0;
  int maze_index = 0;
  long level_start_tick = 0;

  int pacman_node = -1;
  Direction pacman_dir = Direction::Neutral;
  std::array<GhostState, 4> ghosts;

  std::vector<std::uint8_t> pills_eaten;        // parallel to maze().pill_nodes
  std::vector<std::uint8_t> power_pills_eaten;  // parallel to maze().power_pill_nodes
  int eat_chain = 0;  // ghosts eaten under the current power pill, 0..4
  bool game_over = false;

  const MazeGraph& maze() const { return (*mazes)[static_cast<size_t>(maze_index)]; }
  const GhostState& ghost(GhostIdentity g) const {
    return ghosts[static_cast<size_t>(g)];
  }
  GhostState& ghost(GhostIdentity g) { return ghosts[static_cast<size_t>(g)]; }

  // In the lair: waiting out the timer or still walking lair/door cells.
  bool ghost_in_lair(GhostIdentity g) const;
  int pills_remaining() const;
  int power_pills_remaining() const;
  bool pill_present_at(int node) const;        // false when consumed or not a pill node
  bool power_pill_present_at(int node) const;
};

// Tick 0, level 1, pacman at the start, ghosts in the lair with their
// configured exit stagger, all pills present. Throws ConfigError on an
// empty maze list.
GameState new_game(const std::vector<MazeGraph>& mazes, const RuleConfig& config,
                   std::uint64_t seed);

// Pacman: every walkable direction plus NEUTRAL. Ghost: walkable directions
// minus its reverse, never NEUTRAL outside the lair; {NEUTRAL} while inside.
DirectionSet legal_moves_pacman(const GameState& s);
DirectionSet legal_moves_ghost(const GameState& s, GhostIdentity g);

// True when the ghost faces a real decision this tick: more than one legal
// move while it is due to move, or it just stepped out of the lair.
bool requires_action(const GameState& s, GhostIdentity g);

// One tick. Total over any move inputs: illegal or absent moves fall back to
// the agent's continuation rule. Returns the events of the tick.
std::vector<GameEvent> advance(GameState& s, const MoveSet& moves);

// 10n + 4x(200+400+800+1600); power pills deliberately excluded.
int max_level_score(int pill_count);

}  // namespace pacarena
