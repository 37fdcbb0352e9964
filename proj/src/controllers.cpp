#include "pacarena/controllers.hpp"

#include <iostream>
#include <map>

namespace pacarena {

namespace {

// Path distance between two nodes of the view's maze.
int vdist(const AgentView& v, int a, int b) {
  const std::uint16_t d = v.maze->path_distance(a, b);
  return d == kUnreachable ? -1 : d;
}

struct NearestGhost {
  int node = -1;
  int dist = 0;
};

// Nearest visible ghost matching `want_edible`, within `limit` path moves.
// Lair ghosts never count. Ties go to the lowest node index.
NearestGhost nearest_ghost(const AgentView& v, bool want_edible, int limit) {
  NearestGhost best;
  for (const auto& sight : v.ghosts) {
    if (!sight || sight->in_lair || sight->edible != want_edible) continue;
    const int d = vdist(v, v.own_node, sight->node);
    if (d < 0 || d > limit) continue;
    if (best.node < 0 || d < best.dist || (d == best.dist && sight->node < best.node)) {
      best = {sight->node, d};
    }
  }
  return best;
}

// Nearest pill or power pill the observer believes is still present.
int nearest_present_pill(const AgentView& v) {
  int best = -1, best_d = 0;
  auto scan = [&](const std::vector<int>& nodes, const std::vector<PillKnowledge>& know) {
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (know[i] != PillKnowledge::Present) continue;
      const int d = vdist(v, v.own_node, nodes[i]);
      if (d < 0) continue;
      if (best < 0 || d < best_d || (d == best_d && nodes[i] < best)) {
        best = nodes[i];
        best_d = d;
      }
    }
  };
  scan(v.maze->pill_nodes, v.pills);
  scan(v.maze->power_pill_nodes, v.power_pills);
  return best;
}

// Is the believed pacman position within `radius` of a power pill the
// observer knows is still there? Unseen pills don't scare anyone.
bool pacman_close_to_ppill(const AgentView& v, int pacman_node, int radius) {
  const auto& nodes = v.maze->power_pill_nodes;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (v.power_pills[i] != PillKnowledge::Present) continue;
    const int d = vdist(v, pacman_node, nodes[i]);
    if (d >= 0 && d <= radius) return true;
  }
  return false;
}

DirectionSet walkable_moves(const AgentView& v) {
  DirectionSet set;
  for (Direction d : kMoveDirections) {
    const int nb = v.maze->neighbor(v.own_node, d);
    if (nb >= 0 && v.maze->navigable(nb)) set.add(d);
  }
  return set;
}

DirectionSet ghost_moves(const AgentView& v) {
  DirectionSet set = walkable_moves(v);
  if (v.own_dir != Direction::Neutral) set.remove(reverse(v.own_dir));
  return set;
}

Direction random_of(DirectionSet set, Rng& rng) {
  if (set.empty()) return Direction::Neutral;
  return set.nth(rng.next_int(set.size()));
}

std::optional<Direction> ghost_forbidden(const AgentView& v) {
  if (v.own_dir == Direction::Neutral) return std::nullopt;
  return reverse(v.own_dir);
}

// -------- Pacman controllers --------

constexpr int kGhostLimit = 20;  // engagement range of the starter strategy

class StarterPacman : public PacmanController {
 public:
  Direction move(const AgentView& v, std::chrono::nanoseconds) override {
    const NearestGhost threat = nearest_ghost(v, false, kGhostLimit);
    if (threat.node >= 0) return next_move_away_from(*v.maze, v.own_node, threat.node);
    const NearestGhost prey = nearest_ghost(v, true, kGhostLimit);
    if (prey.node >= 0) return next_move_towards(*v.maze, v.own_node, prey.node);
    const int pill = nearest_present_pill(v);
    if (pill >= 0) return next_move_towards(*v.maze, v.own_node, pill);
    return Direction::Neutral;
  }
};

class POPacman : public PacmanController {
 public:
  void reset(std::uint64_t seed) override { rng_ = Rng(seed); }

  Direction move(const AgentView& v, std::chrono::nanoseconds) override {
    const NearestGhost threat = nearest_ghost(v, false, kGhostLimit);
    if (threat.node >= 0) return next_move_away_from(*v.maze, v.own_node, threat.node);
    const NearestGhost prey = nearest_ghost(v, true, kGhostLimit);
    if (prey.node >= 0) return next_move_towards(*v.maze, v.own_node, prey.node);
    const int pill = nearest_present_pill(v);
    if (pill >= 0) return next_move_towards(*v.maze, v.own_node, pill);
    return random_of(walkable_moves(v), rng_);
  }

 private:
  Rng rng_{0};
};

class RandomPacman : public PacmanController {
 public:
  void reset(std::uint64_t seed) override { rng_ = Rng(seed); }
  Direction move(const AgentView& v, std::chrono::nanoseconds) override {
    return random_of(walkable_moves(v), rng_);
  }

 private:
  Rng rng_{0};
};

// -------- Ghost controllers --------

// The shared chase/flee block of the starter ghosts: flee when edible or
// when pacman hovers near a live power pill, otherwise chase 90% of the
// time and wander 10%.
Direction starter_ghost_rule(const AgentView& v, int pacman_node, int ppill_radius, Rng& rng) {
  if (v.self_edible || pacman_close_to_ppill(v, pacman_node, ppill_radius))
    return next_move_away_from(*v.maze, v.own_node, pacman_node, ghost_forbidden(v));
  if (rng.next_float() < 0.9)
    return next_move_towards(*v.maze, v.own_node, pacman_node, ghost_forbidden(v));
  return random_of(ghost_moves(v), rng);
}

class StarterGhost : public GhostController {
 public:
  explicit StarterGhost(const ControllerParams& p) : params_(p) {}
  void reset(std::uint64_t seed) override { rng_ = Rng(seed); }

  Direction move(const AgentView& v, Messenger&, std::chrono::nanoseconds) override {
    if (!v.requires_action) return Direction::Neutral;
    if (!v.pacman_node) return random_of(ghost_moves(v), rng_);  // unreachable under FULL
    return starter_ghost_rule(v, *v.pacman_node, params_.ppill_proximity, rng_);
  }

 private:
  ControllerParams params_;
  Rng rng_{0};
};

class POGhost : public GhostController {
 public:
  explicit POGhost(const ControllerParams& p) : params_(p) {}
  void reset(std::uint64_t seed) override { rng_ = Rng(seed); }

  Direction move(const AgentView& v, Messenger&, std::chrono::nanoseconds) override {
    if (!v.requires_action) return Direction::Neutral;
    if (v.pacman_node) return starter_ghost_rule(v, *v.pacman_node, params_.ppill_proximity, rng_);
    return random_of(ghost_moves(v), rng_);
  }

 private:
  ControllerParams params_;
  Rng rng_{0};
};

// POGhost plus a sighting memory fed by broadcasts. Seeing pacman is
// announced every tick; otherwise the freshest delivered sighting is
// adopted, and anything older than the tick threshold is forgotten.
class POCommGhost : public GhostController {
 public:
  POCommGhost(GhostIdentity self, const ControllerParams& p) : self_(self), params_(p) {}

  void reset(std::uint64_t seed) override {
    rng_ = Rng(seed);
    last_pacman_ = -1;
    tick_seen_ = -1;
  }

  Direction move(const AgentView& v, Messenger& messenger, std::chrono::nanoseconds) override {
    if (v.tick == 0 || v.tick - tick_seen_ >= params_.pogc_threshold) {
      last_pacman_ = -1;
      tick_seen_ = -1;
    }

    int pacman = v.pacman_node.value_or(-1);
    if (pacman != -1) {
      last_pacman_ = pacman;
      tick_seen_ = v.tick;
      messenger.send({self_, std::nullopt, MessageType::PacmanSeen, pacman, v.tick}, v.tick);
    } else {
      for (const Message& m : messenger.collect(self_, v.tick)) {
        if (m.type != MessageType::PacmanSeen) continue;
        if (m.tick > tick_seen_) {
          last_pacman_ = m.data;
          tick_seen_ = m.tick;
        }
      }
      pacman = last_pacman_;
    }

    if (!v.requires_action) return Direction::Neutral;
    if (pacman != -1) return starter_ghost_rule(v, pacman, params_.ppill_proximity, rng_);
    return random_of(ghost_moves(v), rng_);
  }

 private:
  GhostIdentity self_;
  ControllerParams params_;
  Rng rng_{0};
  int last_pacman_ = -1;
  long tick_seen_ = -1;
};

class RandomGhost : public GhostController {
 public:
  void reset(std::uint64_t seed) override { rng_ = Rng(seed); }
  Direction move(const AgentView& v, Messenger&, std::chrono::nanoseconds) override {
    if (!v.requires_action) return Direction::Neutral;
    return random_of(ghost_moves(v), rng_);
  }

 private:
  Rng rng_{0};
};

// -------- Registry --------

std::map<std::string, PacmanFactory>& pacman_registry() {
  static std::map<std::string, PacmanFactory> reg = {
      {"COP", [](const ControllerParams&) { return std::make_unique<StarterPacman>(); }},
      {"POP", [](const ControllerParams&) { return std::make_unique<POPacman>(); }},
      {"RANDOM_P", [](const ControllerParams&) { return std::make_unique<RandomPacman>(); }},
  };
  return reg;
}

template <typename Member>
GhostTeam uniform_team(const std::string& name, const ControllerParams& p) {
  GhostTeam team;
  team.name = name;
  for (size_t i = 0; i < 4; ++i) {
    if constexpr (std::is_same_v<Member, POCommGhost>)
      team.members[i] = std::make_unique<Member>(static_cast<GhostIdentity>(i), p);
    else if constexpr (std::is_same_v<Member, RandomGhost>)
      team.members[i] = std::make_unique<Member>();
    else
      team.members[i] = std::make_unique<Member>(p);
  }
  return team;
}

std::map<std::string, GhostTeamFactory>& ghost_registry() {
  static std::map<std::string, GhostTeamFactory> reg = {
      {"COG", [](const ControllerParams& p) { return uniform_team<StarterGhost>("COG", p); }},
      {"POG", [](const ControllerParams& p) { return uniform_team<POGhost>("POG", p); }},
      {"POGC", [](const ControllerParams& p) { return uniform_team<POCommGhost>("POGC", p); }},
      {"RANDOM_G",
       [](const ControllerParams& p) { return uniform_team<RandomGhost>("RANDOM_G", p); }},
  };
  return reg;
}

}  // namespace

void register_pacman_controller(const std::string& name, PacmanFactory factory) {
  pacman_registry()[name] = std::move(factory);
}

void register_ghost_team(const std::string& name, GhostTeamFactory factory) {
  ghost_registry()[name] = std::move(factory);
}

bool is_pacman_controller(const std::string& name) { return pacman_registry().count(name) > 0; }
bool is_ghost_team(const std::string& name) { return ghost_registry().count(name) > 0; }

std::vector<std::string> pacman_controller_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : pacman_registry()) out.push_back(k);
  return out;
}

std::vector<std::string> ghost_team_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : ghost_registry()) out.push_back(k);
  return out;
}

std::unique_ptr<PacmanController> make_pacman_controller(const std::string& name,
                                                         const ControllerParams& params) {
  auto it = pacman_registry().find(name);
  if (it == pacman_registry().end()) throw ConfigError("unknown pacman controller '" + name + "'");
  return it->second(params);
}

GhostTeam make_ghost_team(const std::string& name, const ControllerParams& params) {
  auto it = ghost_registry().find(name);
  if (it == ghost_registry().end()) throw ConfigError("unknown ghost team '" + name + "'");
  GhostTeam team = it->second(params);
  team.name = name;
  return team;
}

PollOutcome budgeted_poll(GhostTeam& team, const std::array<AgentView, 4>& views,
                          Messenger& messenger, std::chrono::milliseconds budget, bool enforce) {
  PollOutcome out;
  using clock = std::chrono::steady_clock;
  const auto start = enforce ? clock::now() : clock::time_point{};
  auto remaining = std::chrono::duration_cast<std::chrono::nanoseconds>(budget);

  for (size_t i = 0; i < 4; ++i) {
    if (enforce) {
      remaining = std::chrono::duration_cast<std::chrono::nanoseconds>(budget) -
                  (clock::now() - start);
      if (remaining <= std::chrono::nanoseconds::zero()) {
        ++out.overruns;
        std::cerr << "[budget] " << ghost_name(static_cast<GhostIdentity>(i))
                  << " skipped: team budget exhausted\n";
        continue;
      }
    }
    Direction mv = Direction::Neutral;
    try {
      const auto before = enforce ? clock::now() : clock::time_point{};
      mv = team.members[i]->move(views[i], messenger, remaining);
      if (enforce && clock::now() - before > remaining) {
        ++out.overruns;
        std::cerr << "[budget] " << ghost_name(static_cast<GhostIdentity>(i))
                  << " overran its slice; move replaced by NEUTRAL\n";
        mv = Direction::Neutral;
      }
    } catch (const std::exception& e) {
      std::cerr << "[controller] " << ghost_name(static_cast<GhostIdentity>(i))
                << " threw: " << e.what() << "; treated as NEUTRAL\n";
      mv = Direction::Neutral;
    }
    out.moves[i] = mv;
  }
  return out;
}

}  // namespace pacarena
