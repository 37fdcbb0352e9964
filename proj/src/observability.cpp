#include "pacarena/observability.hpp"

#include <algorithm>

namespace pacarena {

namespace {

int effective_range(const VisibilityModel& m, const MazeGraph& g) {
  return m.range > 0 ? m.range : g.longest_corridor_run();
}

// Straight-line sight along the grid row/column, walls blocking, no wrap.
bool los_clear(const MazeGraph& g, int a, int b, int range) {
  const auto& na = g.nodes[static_cast<size_t>(a)];
  const auto& nb = g.nodes[static_cast<size_t>(b)];
  if (na.row == nb.row) {
    const int lo = std::min(na.col, nb.col), hi = std::max(na.col, nb.col);
    if (hi - lo > range) return false;
    for (int c = lo + 1; c < hi; ++c)
      if (g.spec.at(na.row, c) == kWall) return false;
    return true;
  }
  if (na.col == nb.col) {
    const int lo = std::min(na.row, nb.row), hi = std::max(na.row, nb.row);
    if (hi - lo > range) return false;
    for (int r = lo + 1; r < hi; ++r)
      if (g.spec.at(r, na.col) == kWall) return false;
    return true;
  }
  return false;
}

bool on_ray(const MazeGraph& g, int from, Direction dir, int to) {
  if (from == to) return true;  // an agent always sees itself
  const auto& a = g.nodes[static_cast<size_t>(from)];
  const auto& b = g.nodes[static_cast<size_t>(to)];
  switch (dir) {
    case Direction::Up: return a.col == b.col && b.row < a.row;
    case Direction::Down: return a.col == b.col && b.row > a.row;
    case Direction::Left: return a.row == b.row && b.col < a.col;
    case Direction::Right: return a.row == b.row && b.col > a.col;
    case Direction::Neutral: return false;
  }
  return false;
}

}  // namespace

bool visible(const VisibilityModel& model, const MazeGraph& g, int observer_node,
             Direction observer_dir, int target_node) {
  switch (model.kind) {
    case VisModelKind::Full:
      return true;
    case VisModelKind::Los:
      return los_clear(g, observer_node, target_node, effective_range(model, g));
    case VisModelKind::ForwardLos:
      return on_ray(g, observer_node, observer_dir, target_node) &&
             los_clear(g, observer_node, target_node, effective_range(model, g));
    case VisModelKind::Radius:
      return metric_distance(g, observer_node, target_node, model.metric) <= model.d;
  }
  return false;
}

namespace {

void fill_view_impl(const VisibilityModel& model, const VisibilityIndex* index,
                    const GameState& s, bool pacman_observer, GhostIdentity ghost,
                    AgentView& v) {
  const MazeGraph& g = s.maze();
  v.observer_is_pacman = pacman_observer;
  v.observer_ghost = ghost;
  v.maze = &g;
  v.tick = s.tick;
  v.score = s.score;
  v.level = s.level;
  v.lives = s.lives;
  v.requires_action = false;
  v.self_edible = false;

  int obs_node;
  Direction obs_dir;
  if (pacman_observer) {
    obs_node = s.pacman_node;
    obs_dir = s.pacman_dir;
  } else {
    const GhostState& gs = s.ghost(ghost);
    obs_node = gs.node;
    obs_dir = gs.last_dir;
    v.self_edible = gs.edible_ticks > 0;
  }
  v.own_node = obs_node;
  v.own_dir = obs_dir;

  auto sees = [&](int target) {
    return index ? index->test(obs_node, obs_dir, target)
                 : visible(model, g, obs_node, obs_dir, target);
  };

  const bool full = model.kind == VisModelKind::Full;

  if (pacman_observer) {
    v.pacman_node = s.pacman_node;
  } else {
    v.pacman_node.reset();
    if (sees(s.pacman_node)) v.pacman_node = s.pacman_node;
  }

  for (size_t i = 0; i < 4; ++i) {
    const GhostIdentity id = static_cast<GhostIdentity>(i);
    const GhostState& gs = s.ghosts[i];
    const bool in_lair = s.ghost_in_lair(id);
    v.ghosts[i].reset();
    const bool self = !pacman_observer && id == ghost;
    // Lair-interior ghosts are hidden from pacman under any PO model; FULL
    // reports everything.
    if (!self && pacman_observer && in_lair && !full) continue;
    if (self || sees(gs.node))
      v.ghosts[i] = GhostSight{gs.node, gs.last_dir, gs.edible_ticks > 0, in_lair};
  }

  v.pills.assign(g.pill_nodes.size(), PillKnowledge::Unknown);
  for (size_t i = 0; i < g.pill_nodes.size(); ++i)
    if (full || sees(g.pill_nodes[i]))
      v.pills[i] = s.pills_eaten[i] ? PillKnowledge::Eaten : PillKnowledge::Present;

  v.power_pills.assign(g.power_pill_nodes.size(), PillKnowledge::Unknown);
  for (size_t i = 0; i < g.power_pill_nodes.size(); ++i)
    if (full || sees(g.power_pill_nodes[i]))
      v.power_pills[i] = s.power_pills_eaten[i] ? PillKnowledge::Eaten : PillKnowledge::Present;
}

}  // namespace

AgentView make_view(const VisibilityModel& model, const GameState& s, bool pacman_observer,
                    GhostIdentity ghost) {
  AgentView v;
  fill_view_impl(model, nullptr, s, pacman_observer, ghost, v);
  return v;
}

VisibilityIndex::VisibilityIndex(const VisibilityModel& model, const MazeGraph& g)
    : graph_(&g), model_(model) {
  directional_ = model.kind == VisModelKind::ForwardLos;
  const size_t n = g.nodes.size();
  words_ = (n + 63) / 64;
  const size_t rows = directional_ ? n * 5 : n;
  bits_.assign(rows * words_, 0);
  for (size_t obs = 0; obs < n; ++obs) {
    if (directional_) {
      for (int d = 0; d < 5; ++d) {
        std::uint64_t* row = bits_.data() + (obs * 5 + static_cast<size_t>(d)) * words_;
        for (size_t t = 0; t < n; ++t)
          if (visible(model, g, static_cast<int>(obs), static_cast<Direction>(d),
                      static_cast<int>(t)))
            row[t / 64] |= 1ULL << (t % 64);
      }
    } else {
      std::uint64_t* row = bits_.data() + obs * words_;
      for (size_t t = 0; t < n; ++t)
        if (visible(model, g, static_cast<int>(obs), Direction::Neutral, static_cast<int>(t)))
          row[t / 64] |= 1ULL << (t % 64);
    }
  }
}

const std::uint64_t* VisibilityIndex::row(int node, Direction dir) const {
  const size_t idx = directional_
                         ? static_cast<size_t>(node) * 5 + static_cast<size_t>(dir)
                         : static_cast<size_t>(node);
  return bits_.data() + idx * words_;
}

bool VisibilityIndex::test(int observer_node, Direction observer_dir, int target_node) const {
  const std::uint64_t* r = row(observer_node, observer_dir);
  return (r[static_cast<size_t>(target_node) / 64] >>
          (static_cast<size_t>(target_node) % 64)) & 1ULL;
}

void VisibilityIndex::fill_view(const GameState& s, bool pacman_observer, GhostIdentity ghost,
                                AgentView& out) const {
  fill_view_impl(model_, this, s, pacman_observer, ghost, out);
}

}  // namespace pacarena
