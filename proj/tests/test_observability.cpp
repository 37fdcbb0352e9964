#include <doctest.h>

#include "pacarena/observability.hpp"
#include "pacarena/rng.hpp"
#include "support/mazes.hpp"
#include "support/oracles.hpp"

using namespace pacarena;
using pacarena::testing::GridOracle;

namespace {

MazeGraph ring() { return build_graph(parse_maze(pacarena::testing::kRingMazeText)); }

int node(const MazeGraph& g, int r, int c) {
  const int n = g.node_at(r, c);
  REQUIRE(n >= 0);
  return n;
}

}  // namespace

TEST_CASE("LOS sees along open rows, not around corners") {
  const MazeGraph g = ring();
  const auto los = VisibilityModel::los();
  CHECK(visible(los, g, node(g, 1, 1), Direction::Neutral, node(g, 1, 5)));
  CHECK_FALSE(visible(los, g, node(g, 1, 1), Direction::Neutral, node(g, 3, 3)));
  CHECK(visible(los, g, node(g, 1, 1), Direction::Neutral, node(g, 1, 1)));  // self
}

TEST_CASE("RADIUS ignores walls") {
  const MazeGraph g = ring();
  const auto rad = VisibilityModel::radius(DistanceMetric::Manhattan, 3.0);
  CHECK(visible(rad, g, node(g, 1, 1), Direction::Neutral, node(g, 3, 2)));  // 2+1 <= 3
  CHECK_FALSE(visible(rad, g, node(g, 1, 1), Direction::Neutral, node(g, 3, 5)));  // 2+4 > 3
}

TEST_CASE("FORWARD_LOS restricts sight to the facing ray") {
  const MazeGraph g = ring();
  const auto fwd = VisibilityModel::forward_los();
  CHECK_FALSE(visible(fwd, g, node(g, 1, 1), Direction::Right, node(g, 3, 1)));
  CHECK(visible(fwd, g, node(g, 1, 1), Direction::Right, node(g, 1, 4)));
  CHECK(visible(fwd, g, node(g, 1, 1), Direction::Down, node(g, 3, 1)));
  // Facing nowhere sees only itself.
  CHECK(visible(fwd, g, node(g, 1, 1), Direction::Neutral, node(g, 1, 1)));
  CHECK_FALSE(visible(fwd, g, node(g, 1, 1), Direction::Neutral, node(g, 1, 2)));
}

TEST_CASE("LOS range cutoff matches the ray-walk oracle") {
  const MazeGraph g = ring();
  const GridOracle oracle(pacarena::testing::ring_rows());
  const auto los3 = VisibilityModel::los(3);
  CHECK_FALSE(visible(los3, g, node(g, 1, 1), Direction::Neutral, node(g, 1, 5)));  // 4 > 3
  for (const auto& a : g.nodes)
    for (const auto& b : g.nodes)
      CHECK(visible(los3, g, g.node_at(a.row, a.col), Direction::Neutral,
                    g.node_at(b.row, b.col)) == oracle.los_visible(a.row, a.col, b.row, b.col, 3));
}

TEST_CASE("sight never crosses wrap tunnels") {
  const MazeGraph g = build_graph(parse_maze(
      "name: gap\n"
      "#####\n"
      "#...#\n"
      "..#..\n"
      "#####\n"));
  const int left = node(g, 2, 0), right = node(g, 2, 4);
  CHECK(g.path_distance(left, right) == 1);  // adjacent through the tunnel
  CHECK_FALSE(visible(VisibilityModel::los(), g, left, Direction::Neutral, right));
}

TEST_CASE("LOS symmetry and range monotonicity") {
  for (const char* text :
       {pacarena::testing::kRingMazeText, pacarena::testing::kLairMazeText}) {
    const MazeGraph g = build_graph(parse_maze(text));
    for (int r : {1, 2, 4}) {
      const auto los = VisibilityModel::los(r);
      const auto wider = VisibilityModel::los(r + 2);
      for (int a = 0; a < g.node_count(); ++a) {
        for (int b = 0; b < g.node_count(); ++b) {
          const bool ab = visible(los, g, a, Direction::Neutral, b);
          CHECK(ab == visible(los, g, b, Direction::Neutral, a));
          if (ab) CHECK(visible(wider, g, a, Direction::Neutral, b));
        }
      }
    }
  }
}

TEST_CASE("RADIUS manhattan is exactly the diamond, by enumeration") {
  const MazeGraph g = ring();
  const int d = 2;
  const auto rad = VisibilityModel::radius(DistanceMetric::Manhattan, d);
  for (const auto& a : g.nodes) {
    for (const auto& b : g.nodes) {
      const bool in_diamond = std::abs(a.row - b.row) + std::abs(a.col - b.col) <= d;
      CHECK(visible(rad, g, g.node_at(a.row, a.col), Direction::Neutral,
                    g.node_at(b.row, b.col)) == in_diamond);
    }
  }
}

TEST_CASE("VisibilityIndex answers match visible() for every model") {
  const MazeGraph g = build_graph(parse_maze(pacarena::testing::kLairMazeText));
  const VisibilityModel models[] = {
      VisibilityModel::full(), VisibilityModel::los(), VisibilityModel::los(3),
      VisibilityModel::forward_los(4), VisibilityModel::radius(DistanceMetric::Euclidean, 3.5),
      VisibilityModel::radius(DistanceMetric::Manhattan, 4)};
  for (const auto& model : models) {
    const VisibilityIndex index(model, g);
    for (int a = 0; a < g.node_count(); ++a)
      for (int b = 0; b < g.node_count(); ++b)
        for (Direction dir : {Direction::Up, Direction::Right, Direction::Neutral})
          CHECK(index.test(a, dir, b) == visible(model, g, a, dir, b));
  }
}

TEST_CASE("FULL view reports everything") {
  const auto mazes = std::vector<MazeGraph>{build_graph(parse_maze(pacarena::testing::kLairMazeText))};
  GameState s = new_game(mazes, RuleConfig{}, 3);
  const AgentView v = make_view(VisibilityModel::full(), s, true);
  CHECK(v.pacman_node.has_value());
  for (const auto& gs : v.ghosts) {
    REQUIRE(gs.has_value());
    CHECK(gs->in_lair);
  }
  for (auto k : v.pills) CHECK(k == PillKnowledge::Present);
  for (auto k : v.power_pills) CHECK(k == PillKnowledge::Present);
}

TEST_CASE("PO hides lair ghosts from pacman even in line of sight") {
  const auto mazes = std::vector<MazeGraph>{build_graph(parse_maze(
      "name: hall\n"
      "#######\n"
      "#P..DG#\n"
      "#...###\n"
      "#######\n"))};
  GameState s = new_game(mazes, RuleConfig{}, 1);
  // Blinky sits in the lair straight down the observer's row.
  REQUIRE(s.ghost(GhostIdentity::Blinky).node == mazes[0].lair_nodes[0]);
  const AgentView po = make_view(VisibilityModel::los(), s, true);
  CHECK_FALSE(po.ghosts[0].has_value());
  const AgentView full = make_view(VisibilityModel::full(), s, true);
  CHECK(full.ghosts[0].has_value());
}

TEST_CASE("a ghost always sees itself, with its own edible state") {
  const auto mazes = std::vector<MazeGraph>{build_graph(parse_maze(pacarena::testing::kLairMazeText))};
  GameState s = new_game(mazes, RuleConfig{}, 3);
  GhostState& b = s.ghost(GhostIdentity::Blinky);
  b.lair_ticks = 0;
  b.node = mazes[0].node_at(5, 1);
  b.edible_ticks = 9;
  const AgentView v = make_view(VisibilityModel::los(1), s, false, GhostIdentity::Blinky);
  REQUIRE(v.ghosts[0].has_value());
  CHECK(v.ghosts[0]->node == b.node);
  CHECK(v.self_edible);
}

TEST_CASE("projection soundness: present fields equal ground truth on random games") {
  const std::vector<MazeGraph> mazes = {build_graph(parse_maze(pacarena::testing::kLairMazeText))};
  const VisibilityModel models[] = {
      VisibilityModel::full(), VisibilityModel::los(), VisibilityModel::forward_los(),
      VisibilityModel::radius(DistanceMetric::Euclidean, 4)};
  RuleConfig cfg;
  cfg.level_tick_limit = 120;
  cfg.max_levels = 1;
  Rng rng(99);
  for (int game = 0; game < 8; ++game) {
    GameState s = new_game(mazes, cfg, 1000 + game);
    while (!s.game_over) {
      MoveSet m;
      m.pacman = static_cast<Direction>(rng.next_int(4));
      for (auto& gm : m.ghosts) gm = static_cast<Direction>(rng.next_int(4));
      advance(s, m);
      for (const auto& model : models) {
        for (int agent = -1; agent < 4; ++agent) {
          const AgentView v = agent < 0
                                  ? make_view(model, s, true)
                                  : make_view(model, s, false, static_cast<GhostIdentity>(agent));
          CHECK(v.own_node == (agent < 0 ? s.pacman_node
                                         : s.ghost(static_cast<GhostIdentity>(agent)).node));
          if (v.pacman_node) CHECK(*v.pacman_node == s.pacman_node);
          for (size_t i = 0; i < 4; ++i) {
            if (!v.ghosts[i]) continue;
            const GhostState& gs = s.ghosts[i];
            CHECK(v.ghosts[i]->node == gs.node);
            CHECK(v.ghosts[i]->dir == gs.last_dir);
            CHECK(v.ghosts[i]->edible == (gs.edible_ticks > 0));
            CHECK(v.ghosts[i]->in_lair == s.ghost_in_lair(static_cast<GhostIdentity>(i)));
          }
          const MazeGraph& g = mazes[0];
          for (size_t i = 0; i < g.pill_nodes.size(); ++i) {
            if (v.pills[i] == PillKnowledge::Unknown) continue;
            CHECK((v.pills[i] == PillKnowledge::Eaten) == (s.pills_eaten[i] != 0));
          }
          for (size_t i = 0; i < g.power_pill_nodes.size(); ++i) {
            if (v.power_pills[i] == PillKnowledge::Unknown) continue;
            CHECK((v.power_pills[i] == PillKnowledge::Eaten) == (s.power_pills_eaten[i] != 0));
          }
        }
      }
    }
  }
}

TEST_CASE("FULL dominates: anything visible under LOS or RADIUS is present under FULL") {
  const std::vector<MazeGraph> mazes = {build_graph(parse_maze(pacarena::testing::kLairMazeText))};
  GameState s = new_game(mazes, RuleConfig{}, 5);
  for (int t = 0; t < 40; ++t) advance(s, {});
  const AgentView full = make_view(VisibilityModel::full(), s, true);
  for (const auto& model : {VisibilityModel::los(), VisibilityModel::radius(DistanceMetric::Euclidean, 5)}) {
    const AgentView po = make_view(model, s, true);
    for (size_t i = 0; i < 4; ++i)
      if (po.ghosts[i]) CHECK(full.ghosts[i].has_value());
    for (size_t i = 0; i < po.pills.size(); ++i)
      if (po.pills[i] != PillKnowledge::Unknown) CHECK(full.pills[i] != PillKnowledge::Unknown);
  }
}
