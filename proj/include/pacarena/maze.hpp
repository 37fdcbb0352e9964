#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacarena/direction.hpp"

namespace pacarena {

// Cell codes of the maze file format.
inline constexpr char kWall = '#';
inline constexpr char kPill = '.';
inline constexpr char kPowerPill = 'o';
inline constexpr char kEmpty = ' ';
inline constexpr char kPacmanStart = 'P';
inline constexpr char kLair = 'G';
inline constexpr char kLairDoor = 'D';

struct MazeSpec {
  std::string name;
  std::vector<std::string> grid;  // rectangular; validated by parse_maze

  int rows() const { return static_cast<int>(grid.size()); }
  int cols() const { return grid.empty() ? 0 : static_cast<int>(grid[0].size()); }
  char at(int r, int c) const { return grid[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
  bool in_bounds(int r, int c) const { return r >= 0 && r < rows() && c >= 0 && c < cols(); }
  bool walkable(int r, int c) const { return in_bounds(r, c) && at(r, c) != kWall; }
  // Raw text used for hashing replays against the exact layout.
  std::string canonical_text() const;
};

class MazeParseError : public std::runtime_error {
 public:
  explicit MazeParseError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

// Validates and returns the spec, or throws MazeParseError listing every
// violated invariant with line/column positions.
MazeSpec parse_maze(const std::string& text);

enum class NodeKind : std::uint8_t { Corridor, Junction, Lair, LairDoor };

enum class DistanceMetric : std::uint8_t { Euclidean, Manhattan, Path };

inline constexpr std::uint16_t kUnreachable = 0xffff;

struct MazeNode {
  int row = 0;
  int col = 0;
  NodeKind kind = NodeKind::Corridor;
  bool has_pill = false;
  bool has_power_pill = false;
};

class MazeGraph {
 public:
  std::string name;
  MazeSpec spec;

  std::vector<MazeNode> nodes;
  // neighbors[n][dir], -1 where blocked. Wrap tunnels are stitched across
  // row edges; sight in the observability module does not follow them.
  std::vector<std::array<int, 4>> neighbors;
  std::vector<int> pill_nodes;        // node ids carrying a pill
  std::vector<int> power_pill_nodes;  // node ids carrying a power pill
  std::vector<int> lair_nodes;
  std::vector<int> door_nodes;
  std::optional<int> declared_start;  // 'P' cell, if the maze has one

  int node_count() const { return static_cast<int>(nodes.size()); }
  int node_at(int r, int c) const;  // -1 if not walkable
  int neighbor(int node, Direction d) const {
    return neighbors[static_cast<size_t>(node)][static_cast<unsigned>(d)];
  }
  int degree(int node) const;
  // True for nodes agents may occupy while on the board (not lair interior
  // or door).
  bool navigable(int node) const {
    NodeKind k = nodes[static_cast<size_t>(node)].kind;
    return k == NodeKind::Corridor || k == NodeKind::Junction;
  }

  std::uint16_t path_distance(int a, int b) const {
    return dist_[static_cast<size_t>(a) * nodes.size() + static_cast<size_t>(b)];
  }

  // Position of `node` within pill_nodes / power_pill_nodes, -1 when the
  // node carries none.
  int pill_index(int node) const { return pill_index_[static_cast<size_t>(node)]; }
  int power_pill_index(int node) const { return power_index_[static_cast<size_t>(node)]; }

  // Game-start placement. Falls back to the first walkable cell in row-major
  // order when the maze declares no 'P'.
  int start_node() const;
  // Where the given ghost slot spawns. Lair cells are assigned round-robin;
  // a maze without a lair uses the node farthest from the start instead.
  int ghost_spawn(int ghost_index) const;
  bool has_lair() const { return !lair_nodes.empty(); }
  // One step of the canned exit route from a lair/door node, -1 from
  // anywhere else.
  int lair_exit_step(int node) const;

  // Length in cells of the longest straight walkable run; the default LOS
  // range so sight always spans a full corridor.
  int longest_corridor_run() const { return longest_run_; }

  friend MazeGraph build_graph(const MazeSpec& spec);

 private:
  std::vector<std::uint16_t> dist_;  // all-pairs BFS, row-major
  std::vector<int> grid_index_;      // (r,c) -> node id or -1
  std::vector<int> exit_step_;       // per node, next node of the lair exit route
  std::vector<int> pill_index_;      // per node, index into pill_nodes or -1
  std::vector<int> power_index_;
  int longest_run_ = 0;
};

MazeGraph build_graph(const MazeSpec& spec);
MazeGraph load_maze_file(const std::string& path);

// Legal direction minimizing path distance from the successor to target;
// ties broken in canonical order. Neutral when from == target or when every
// candidate is forbidden (forced NEUTRAL). Candidates are navigable
// neighbors only, minus `forbidden`.
Direction next_move_towards(const MazeGraph& g, int from, int target,
                            std::optional<Direction> forbidden = std::nullopt);

// Same candidate rule, maximizing distance to threat.
Direction next_move_away_from(const MazeGraph& g, int from, int threat,
                              std::optional<Direction> forbidden = std::nullopt);

double metric_distance(const MazeGraph& g, int a, int b, DistanceMetric metric);

}  // namespace pacarena
