#include "pacarena/engine.hpp"

#include <algorithm>

namespace pacarena {

std::string_view ghost_name(GhostIdentity g) {
  switch (g) {
    case GhostIdentity::Blinky: return "BLINKY";
    case GhostIdentity::Pinky: return "PINKY";
    case GhostIdentity::Inky: return "INKY";
    case GhostIdentity::Sue: return "SUE";
  }
  return "BLINKY";
}

bool GameState::ghost_in_lair(GhostIdentity g) const {
  const GhostState& gs = ghost(g);
  return gs.lair_ticks > 0 || !maze().navigable(gs.node);
}

int GameState::pills_remaining() const {
  return static_cast<int>(pills_eaten.size()) -
         static_cast<int>(std::count(pills_eaten.begin(), pills_eaten.end(), 1));
}

int GameState::power_pills_remaining() const {
  return static_cast<int>(power_pills_eaten.size()) -
         static_cast<int>(std::count(power_pills_eaten.begin(), power_pills_eaten.end(), 1));
}

bool GameState::pill_present_at(int node) const {
  const int i = maze().pill_index(node);
  return i >= 0 && !pills_eaten[static_cast<size_t>(i)];
}

bool GameState::power_pill_present_at(int node) const {
  const int i = maze().power_pill_index(node);
  return i >= 0 && !power_pills_eaten[static_cast<size_t>(i)];
}

namespace {

void reset_positions(GameState& s) {
  const MazeGraph& m = s.maze();
  s.pacman_node = m.start_node();
  s.pacman_dir = Direction::Neutral;
  for (int i = 0; i < 4; ++i) {
    GhostState& g = s.ghosts[static_cast<size_t>(i)];
    g.node = m.ghost_spawn(i);
    g.last_dir = Direction::Neutral;
    g.edible_ticks = 0;
    g.lair_ticks = s.config.lair_exit[static_cast<size_t>(i)];
    // A lairless maze holds its ghosts in a virtual lair on the spawn node;
    // they must spend at least one tick there.
    if (!m.has_lair()) g.lair_ticks = std::max(g.lair_ticks, 1);
    g.just_exited = false;
  }
  s.eat_chain = 0;
}

void load_level(GameState& s) {
  const MazeGraph& m = s.maze();
  s.pills_eaten.assign(m.pill_nodes.size(), 0);
  s.power_pills_eaten.assign(m.power_pill_nodes.size(), 0);
  reset_positions(s);
}

Direction step_direction(const MazeGraph& m, int from, int to) {
  for (Direction d : kMoveDirections)
    if (m.neighbor(from, d) == to) return d;
  return Direction::Neutral;
}

}  // namespace

GameState new_game(const std::vector<MazeGraph>& mazes, const RuleConfig& config,
                   std::uint64_t seed) {
  if (mazes.empty()) throw ConfigError("empty maze list");
  GameState s;
  s.mazes = &mazes;
  s.config = config;
  s.seed = seed;
  s.lives = config.lives;
  s.maze_index = 0;
  load_level(s);
  return s;
}

DirectionSet legal_moves_pacman(const GameState& s) {
  DirectionSet set;
  const MazeGraph& m = s.maze();
  for (Direction d : kMoveDirections) {
    const int nb = m.neighbor(s.pacman_node, d);
    if (nb >= 0 && m.navigable(nb)) set.add(d);
  }
  set.add(Direction::Neutral);
  return set;
}

DirectionSet legal_moves_ghost(const GameState& s, GhostIdentity g) {
  DirectionSet set;
  const GhostState& gs = s.ghost(g);
  if (s.ghost_in_lair(g)) {
    set.add(Direction::Neutral);
    return set;
  }
  const MazeGraph& m = s.maze();
  for (Direction d : kMoveDirections) {
    if (gs.last_dir != Direction::Neutral && d == reverse(gs.last_dir)) continue;
    const int nb = m.neighbor(gs.node, d);
    if (nb >= 0 && m.navigable(nb)) set.add(d);
  }
  return set;
}

bool requires_action(const GameState& s, GhostIdentity g) {
  if (s.ghost_in_lair(g)) return false;
  const GhostState& gs = s.ghost(g);
  if (gs.just_exited) return true;
  // Edible ghosts only move on even ticks; no decision on the others.
  if (gs.edible_ticks > 0 && (s.tick % 2) != 0) return false;
  return legal_moves_ghost(s, g).size() > 1;
}

std::vector<GameEvent> advance(GameState& s, const MoveSet& moves) {
  std::vector<GameEvent> events;
  if (s.game_over) return events;

  const MazeGraph& m = s.maze();
  const long t = s.tick;

  for (auto& g : s.ghosts) g.just_exited = false;
  for (auto& g : s.ghosts)
    if (g.edible_ticks > 0) --g.edible_ticks;

  // Pacman move. Illegal or absent input falls back to the last direction,
  // then NEUTRAL.
  const int pac_old = s.pacman_node;
  {
    const DirectionSet legal = legal_moves_pacman(s);
    Direction mv = moves.pacman;
    if (mv != Direction::Neutral && !legal.contains(mv))
      mv = legal.contains(s.pacman_dir) ? s.pacman_dir : Direction::Neutral;
    if (mv != Direction::Neutral) {
      s.pacman_node = m.neighbor(s.pacman_node, mv);
      s.pacman_dir = mv;
    }
  }

  // Ghost moves, fixed identity order.
  std::array<int, 4> ghost_old{};
  for (size_t i = 0; i < 4; ++i) {
    GhostState& g = s.ghosts[i];
    ghost_old[i] = g.node;

    if (g.lair_ticks > 0) {
      --g.lair_ticks;
      if (g.lair_ticks == 0 && m.navigable(g.node)) g.just_exited = true;  // virtual lair
      continue;
    }
    if (!m.navigable(g.node)) {
      // Walking out of the lair, engine-driven.
      const int next = m.lair_exit_step(g.node);
      if (next >= 0) {
        g.last_dir = step_direction(m, g.node, next);
        g.node = next;
        if (m.navigable(next)) g.just_exited = true;
      }
      continue;
    }
    if (g.edible_ticks > 0 && (t % 2) != 0) continue;  // edible half speed

    const DirectionSet legal = legal_moves_ghost(s, static_cast<GhostIdentity>(i));
    if (legal.contains(Direction::Neutral)) continue;
    Direction mv = moves.ghosts[i];
    if (!legal.contains(mv)) mv = legal.contains(g.last_dir) ? g.last_dir : legal.first();
    if (mv == Direction::Neutral) continue;  // boxed in; stays put
    g.node = m.neighbor(g.node, mv);
    g.last_dir = mv;
  }

  // Contact: shared node after the moves, or a node swap during them.
  bool pacman_died = false;
  for (size_t i = 0; i < 4 && !pacman_died; ++i) {
    GhostState& g = s.ghosts[i];
    if (s.ghost_in_lair(static_cast<GhostIdentity>(i))) continue;
    const bool contact = g.node == s.pacman_node ||
                         (g.node == pac_old && ghost_old[i] == s.pacman_node);
    if (!contact) continue;
    if (g.edible_ticks > 0) {
      const int points = s.config.ghost_score_base << std::min(s.eat_chain, 3);
      s.score += points;
      ++s.eat_chain;
      events.push_back(
          {GameEvent::Kind::GhostEaten, t + 1, static_cast<GhostIdentity>(i), points});
      g.node = m.ghost_spawn(static_cast<int>(i));
      g.last_dir = Direction::Neutral;
      g.edible_ticks = 0;
      g.lair_ticks = s.config.lair_wait;
    } else {
      pacman_died = true;
      --s.lives;
      events.push_back({GameEvent::Kind::PacmanEaten, t + 1, GhostIdentity::Blinky, 0});
      if (s.lives <= 0) {
        s.game_over = true;
        events.push_back({GameEvent::Kind::GameOver, t + 1, GhostIdentity::Blinky, 0});
      } else {
        reset_positions(s);
      }
    }
  }

  // Consumption happens only if pacman survived the tick.
  if (!pacman_died) {
    if (const int pi = m.pill_index(s.pacman_node);
        pi >= 0 && !s.pills_eaten[static_cast<size_t>(pi)]) {
      s.pills_eaten[static_cast<size_t>(pi)] = 1;
      s.score += s.config.pill_score;
      events.push_back({GameEvent::Kind::PillEaten, t + 1, GhostIdentity::Blinky,
                        s.config.pill_score});
    }
    if (const int pi = m.power_pill_index(s.pacman_node);
        pi >= 0 && !s.power_pills_eaten[static_cast<size_t>(pi)]) {
      s.power_pills_eaten[static_cast<size_t>(pi)] = 1;
      s.score += s.config.power_pill_score;
      events.push_back({GameEvent::Kind::PowerPillEaten, t + 1, GhostIdentity::Blinky,
                        s.config.power_pill_score});
      s.eat_chain = 0;
      const int duration = s.config.edible_duration_for_level(s.level);
      for (size_t i = 0; i < 4; ++i) {
        if (s.ghost_in_lair(static_cast<GhostIdentity>(i))) continue;
        GhostState& g = s.ghosts[i];
        g.edible_ticks = duration;
        g.last_dir = reverse(g.last_dir);
      }
    }
  }

  // Level transitions: full clear, or the tick limit forcing the level over.
  if (!s.game_over) {
    const bool cleared = s.pills_remaining() == 0 && s.power_pills_remaining() == 0;
    const bool timed_out = (t + 1) - s.level_start_tick >= s.config.level_tick_limit;
    if (cleared || timed_out) {
      events.push_back({GameEvent::Kind::LevelCleared, t + 1, GhostIdentity::Blinky, 0});
      ++s.level;
      if (s.level > s.config.max_levels) {
        s.game_over = true;
        events.push_back({GameEvent::Kind::GameOver, t + 1, GhostIdentity::Blinky, 0});
      } else {
        s.maze_index = (s.maze_index + 1) % static_cast<int>(s.mazes->size());
        s.level_start_tick = t + 1;
        load_level(s);
      }
    }
  }

  s.tick = t + 1;
  return events;
}

int max_level_score(int pill_count) { return 10 * pill_count + 12000; }

}  // namespace pacarena
