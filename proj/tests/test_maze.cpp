#include <doctest.h>

#include <filesystem>
#include <set>

#include "pacarena/maze.hpp"
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

TEST_CASE("parse ring maze counts cells and power pills") {
  const MazeSpec spec = parse_maze(pacarena::testing::kRingMazeText);
  int walkable = 0;
  for (int r = 0; r < spec.rows(); ++r)
    for (int c = 0; c < spec.cols(); ++c)
      if (spec.walkable(r, c)) ++walkable;
  CHECK(walkable == 13);

  const MazeGraph g = ring();
  CHECK(g.pill_nodes.size() == 11);
  REQUIRE(g.power_pill_nodes.size() == 2);
  CHECK(g.nodes[static_cast<size_t>(g.power_pill_nodes[0])].row == 3);
  CHECK(g.nodes[static_cast<size_t>(g.power_pill_nodes[0])].col == 1);
  CHECK(g.nodes[static_cast<size_t>(g.power_pill_nodes[1])].row == 3);
  CHECK(g.nodes[static_cast<size_t>(g.power_pill_nodes[1])].col == 5);
}

TEST_CASE("parse rejects duplicate pacman starts") {
  const std::string text =
      "#####\n"
      "#P.P#\n"
      "#####\n";
  CHECK_THROWS_WITH_AS(parse_maze(text), doctest::Contains("multiple pacman starts"),
                       MazeParseError);
}

TEST_CASE("parse rejects a maze with no walkable cells") {
  CHECK_THROWS_WITH_AS(parse_maze("#"), doctest::Contains("no walkable cells"), MazeParseError);
}

TEST_CASE("parse rejects unknown cell codes with position") {
  const std::string text =
      "#####\n"
      "#.X.#\n"
      "#####\n";
  try {
    parse_maze(text);
    FAIL("expected MazeParseError");
  } catch (const MazeParseError& e) {
    REQUIRE(e.issues().size() == 1);
    CHECK(e.issues()[0].find("line 2") != std::string::npos);
    CHECK(e.issues()[0].find("col 3") != std::string::npos);
    CHECK(e.issues()[0].find("unknown cell code") != std::string::npos);
  }
}

TEST_CASE("parse rejects non-rectangular grids") {
  CHECK_THROWS_WITH_AS(parse_maze("#####\n###\n#####\n"), doctest::Contains("non-rectangular"),
                       MazeParseError);
}

TEST_CASE("parse rejects unreachable corridor cells") {
  const std::string text =
      "#####\n"
      "#.#.#\n"
      "#####\n";
  CHECK_THROWS_WITH_AS(parse_maze(text), doctest::Contains("unreachable"), MazeParseError);
}

TEST_CASE("parse rejects unpaired wrap tunnels") {
  const std::string text =
      "#####\n"
      "#...#\n"
      "....#\n"
      "#####\n";
  CHECK_THROWS_WITH_AS(parse_maze(text), doctest::Contains("unpaired wrap"), MazeParseError);
}

TEST_CASE("parse reads the name header") {
  const MazeSpec spec = parse_maze("name: ringo\n#####\n#...#\n#####\n");
  CHECK(spec.name == "ringo");
}

TEST_CASE("ring maze junctions are exactly (1,3) and (3,3)") {
  const MazeGraph g = ring();
  const GridOracle oracle(pacarena::testing::ring_rows());
  std::set<std::pair<int, int>> junctions;
  for (const auto& n : g.nodes) {
    // Oracle: independent degree count from the grid.
    const int deg = oracle.degree(n.row, n.col);
    CHECK((n.kind == NodeKind::Junction) == (deg >= 3));
    if (n.kind == NodeKind::Junction) junctions.insert({n.row, n.col});
  }
  CHECK(junctions == std::set<std::pair<int, int>>{{1, 3}, {3, 3}});
}

TEST_CASE("ring distance (1,1)-(3,5) matches the BFS oracle") {
  const MazeGraph g = ring();
  const GridOracle oracle(pacarena::testing::ring_rows());
  CHECK(oracle.distance(1, 1, 3, 5) == 6);
  CHECK(g.path_distance(node(g, 1, 1), node(g, 3, 5)) == 6);
}

TEST_CASE("straight corridor has no junctions and end-to-end distance 4") {
  const MazeGraph g = build_graph(parse_maze("#######\n#.....#\n#######\n"));
  for (const auto& n : g.nodes) CHECK(n.kind == NodeKind::Corridor);
  CHECK(g.path_distance(node(g, 1, 1), node(g, 1, 5)) == 4);
}

TEST_CASE("distance table equals independent single-source BFS on every pair") {
  for (const char* text : {pacarena::testing::kRingMazeText,
                           "#####\n#...#\n.....\n#####\n",
                           "#######\n#..#..#\n#.###.#\n#.....#\n#######\n"}) {
    const MazeGraph g = build_graph(parse_maze(text));
    const GridOracle oracle(g.spec.grid);
    for (const auto& a : g.nodes) {
      const auto dist = oracle.bfs(a.row, a.col);
      for (const auto& b : g.nodes) {
        const int expect = [&] {
          auto it = dist.find({b.row, b.col});
          return it == dist.end() ? -1 : it->second;
        }();
        const int got = g.path_distance(g.node_at(a.row, a.col), g.node_at(b.row, b.col));
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("adjacency is symmetric") {
  for (const char* text :
       {pacarena::testing::kRingMazeText, "#####\n#...#\n.....\n#####\n"}) {
    const MazeGraph g = build_graph(parse_maze(text));
    for (int a = 0; a < g.node_count(); ++a) {
      for (Direction d : kMoveDirections) {
        const int b = g.neighbor(a, d);
        if (b >= 0) CHECK(g.neighbor(b, reverse(d)) == a);
      }
    }
  }
}

TEST_CASE("wrap tunnel stitches row edges") {
  const MazeGraph g = build_graph(parse_maze("#####\n#...#\n.....\n#####\n"));
  const int left = node(g, 2, 0), right = node(g, 2, 4);
  CHECK(g.neighbor(left, Direction::Left) == right);
  CHECK(g.neighbor(right, Direction::Right) == left);
  CHECK(g.path_distance(left, right) == 1);
}

TEST_CASE("next_move_towards follows BFS and canonical tie order") {
  const MazeGraph g = ring();
  // (1,1) -> (3,3): RIGHT and DOWN both start 4-move paths; RIGHT wins.
  CHECK(next_move_towards(g, node(g, 1, 1), node(g, 3, 3)) == Direction::Right);
  CHECK(next_move_towards(g, node(g, 2, 3), node(g, 2, 3)) == Direction::Neutral);
  // (1,2) -> (1,5): unrestricted best is RIGHT; banning RIGHT leaves LEFT.
  CHECK(next_move_towards(g, node(g, 1, 2), node(g, 1, 5), Direction::Left) == Direction::Right);
  CHECK(next_move_towards(g, node(g, 1, 2), node(g, 1, 5), Direction::Right) == Direction::Left);
}

TEST_CASE("next_move_towards decreases path distance by one") {
  for (const char* text :
       {pacarena::testing::kRingMazeText, "#####\n#...#\n.....\n#####\n"}) {
    const MazeGraph g = build_graph(parse_maze(text));
    for (int from = 0; from < g.node_count(); ++from) {
      for (int target = 0; target < g.node_count(); ++target) {
        if (from == target) continue;
        const Direction d = next_move_towards(g, from, target);
        REQUIRE(d != Direction::Neutral);
        const int next = g.neighbor(from, d);
        CHECK(g.path_distance(next, target) == g.path_distance(from, target) - 1);
      }
    }
  }
}

TEST_CASE("next_move_away_from maximizes successor distance with canonical ties") {
  const MazeGraph g = ring();
  // From (1,3), threat (1,1): RIGHT and DOWN successors both sit at BFS
  // distance 3; canonical order picks RIGHT (oracle-checked below).
  const GridOracle oracle(pacarena::testing::ring_rows());
  CHECK(oracle.distance(1, 4, 1, 1) == 3);
  CHECK(oracle.distance(2, 3, 1, 1) == 3);
  CHECK(oracle.distance(1, 2, 1, 1) == 1);
  CHECK(next_move_away_from(g, node(g, 1, 3), node(g, 1, 1)) == Direction::Right);

  // Forced corridor: only one legal candidate regardless of the threat.
  CHECK(next_move_away_from(g, node(g, 2, 1), node(g, 3, 1), Direction::Down) == Direction::Up);

  // threat == from: all successors tie at distance 1; canonical first legal.
  CHECK(next_move_away_from(g, node(g, 1, 3), node(g, 1, 3)) == Direction::Right);
}

TEST_CASE("next_move signals forced NEUTRAL when every candidate is forbidden") {
  const MazeGraph g = build_graph(parse_maze("#######\n#.....#\n#######\n"));
  // End of a dead-end corridor, reverse forbidden: nothing legal.
  CHECK(next_move_towards(g, node(g, 1, 1), node(g, 1, 5), Direction::Right) ==
        Direction::Neutral);
}

TEST_CASE("metric distances") {
  const MazeGraph g = ring();
  CHECK(metric_distance(g, node(g, 1, 1), node(g, 3, 3), DistanceMetric::Manhattan) == 4.0);
  for (auto m : {DistanceMetric::Euclidean, DistanceMetric::Manhattan, DistanceMetric::Path})
    CHECK(metric_distance(g, node(g, 2, 3), node(g, 2, 3), m) == 0.0);
  CHECK(metric_distance(g, node(g, 1, 1), node(g, 1, 5), DistanceMetric::Path) == 4.0);
  CHECK(metric_distance(g, node(g, 1, 1), node(g, 1, 5), DistanceMetric::Euclidean) == 4.0);
}

TEST_CASE("bundled mazes parse, are game-ready, and have no dead ends") {
  namespace fs = std::filesystem;
  int checked = 0;
  for (const auto& entry : fs::directory_iterator(MAZE_DIR)) {
    if (entry.path().extension() != ".maze") continue;
    const MazeGraph g = load_maze_file(entry.path().string());
    ++checked;
    if (g.name == "ring") continue;  // navigation test maze, not game-ready
    CHECK(g.declared_start.has_value());
    CHECK(!g.lair_nodes.empty());
    CHECK(!g.door_nodes.empty());
    CHECK(g.power_pill_nodes.size() == 4);
    for (int n = 0; n < g.node_count(); ++n) {
      if (!g.navigable(n)) continue;
      // Dead ends would strand a ghost forever under the no-reversal rule.
      CHECK(g.degree(n) >= 2);
    }
    // Spot-check the distance table against the oracle from a few sources.
    const pacarena::testing::GridOracle oracle(g.spec.grid);
    for (int src : {0, g.node_count() / 2, g.node_count() - 1}) {
      const auto& a = g.nodes[static_cast<size_t>(src)];
      const auto dist = oracle.bfs(a.row, a.col);
      for (const auto& b : g.nodes) {
        auto it = dist.find({b.row, b.col});
        const int expect = it == dist.end() ? -1 : it->second;
        CHECK(g.path_distance(src, g.node_at(b.row, b.col)) == expect);
      }
    }
  }
  CHECK(checked >= 5);  // four arcade-inspired layouts plus the ring maze
}
