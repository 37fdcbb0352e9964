#include "pacarena/match.hpp"

#include <iostream>

namespace pacarena {

std::vector<VisibilityIndex> build_visibility(const std::vector<MazeGraph>& mazes,
                                              const VisibilityModel& model) {
  std::vector<VisibilityIndex> out;
  out.reserve(mazes.size());
  for (const auto& m : mazes) out.emplace_back(model, m);
  return out;
}

MatchResult play_match(const MatchSpec& spec) {
  const std::vector<MazeGraph>& mazes = *spec.mazes;
  const RuleConfig& cfg = spec.config;
  const ControllerParams params = ControllerParams::from_config(cfg);

  auto pacman = make_pacman_controller(spec.pacman_name, params);
  GhostTeam team = make_ghost_team(spec.ghosts_name, params);

  // Per-agent RNG streams split off the match seed: pacman 0, ghosts 1..4.
  pacman->reset(Rng::derive(spec.seed, 0));
  for (size_t i = 0; i < 4; ++i) team.members[i]->reset(Rng::derive(spec.seed, 1 + i));

  std::vector<VisibilityIndex> local_vis;
  const std::vector<VisibilityIndex>* vis = spec.visibility;
  if (!vis) {
    local_vis = build_visibility(mazes, cfg.po);
    vis = &local_vis;
  }

  GameState state = new_game(mazes, cfg, spec.seed);
  Messenger messenger(cfg.msg);

  if (spec.sink) spec.sink(replay_header(mazes[0].name, spec.seed, config_hash(cfg, mazes)));

  const auto budget = std::chrono::milliseconds(cfg.budget_ms);
  const auto budget_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(budget);

  MatchResult result;
  result.pacman = spec.pacman_name;
  result.ghosts = team.name;
  result.seed = spec.seed;

  AgentView pac_view;
  std::array<AgentView, 4> ghost_views;

  while (!state.game_over) {
    const VisibilityIndex& vi = (*vis)[static_cast<size_t>(state.maze_index)];

    MoveSet moves;
    vi.fill_view(state, true, GhostIdentity::Blinky, pac_view);
    try {
      using clock = std::chrono::steady_clock;
      const auto before = spec.enforce_budget ? clock::now() : clock::time_point{};
      moves.pacman = pacman->move(pac_view, budget_ns);
      if (spec.enforce_budget && clock::now() - before > budget_ns) {
        ++result.overruns;
        std::cerr << "[budget] pacman overran; move replaced by NEUTRAL\n";
        moves.pacman = Direction::Neutral;
      }
    } catch (const std::exception& e) {
      std::cerr << "[controller] pacman threw: " << e.what() << "; treated as NEUTRAL\n";
      moves.pacman = Direction::Neutral;
    }

    for (size_t i = 0; i < 4; ++i) {
      vi.fill_view(state, false, static_cast<GhostIdentity>(i), ghost_views[i]);
      ghost_views[i].requires_action = requires_action(state, static_cast<GhostIdentity>(i));
    }
    const PollOutcome poll =
        budgeted_poll(team, ghost_views, messenger, budget, spec.enforce_budget);
    result.overruns += poll.overruns;
    moves.ghosts = poll.moves;

    std::string line;
    if (spec.sink) line = serialize_replay_line(state, moves, {});

    const std::vector<GameEvent> events = advance(state, moves);

    if (spec.sink) spec.sink(append_event_tokens(std::move(line), events));

    for (const GameEvent& e : events) {
      if (e.kind == GameEvent::Kind::LevelCleared) {
        ++result.levels;
        messenger.reset();  // stale node indices are useless on a new maze
      } else if (e.kind == GameEvent::Kind::PacmanEaten) {
        messenger.reset();
      }
    }
  }

  result.score = state.score;
  result.ticks = state.tick;
  return result;
}

}  // namespace pacarena
