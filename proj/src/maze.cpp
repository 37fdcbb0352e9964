#include "pacarena/maze.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>

namespace pacarena {

namespace {

bool is_cell_code(char c) {
  return c == kWall || c == kPill || c == kPowerPill || c == kEmpty ||
         c == kPacmanStart || c == kLair || c == kLairDoor;
}

bool corridor_code(char c) {
  // Cells the reachability invariant covers; lair interior and door are
  // checked separately.
  return c == kPill || c == kPowerPill || c == kEmpty || c == kPacmanStart;
}

}  // namespace

std::string MazeSpec::canonical_text() const {
  std::string out = "name: " + name + "\n";
  for (const auto& row : grid) {
    out += row;
    out += '\n';
  }
  return out;
}

MazeParseError::MazeParseError(std::vector<std::string> issues)
    : std::runtime_error(issues.empty() ? "maze parse error"
                                        : "maze parse error: " + issues.front() +
                              (issues.size() > 1 ? " (+" + std::to_string(issues.size() - 1) +
                                                       " more)"
                                                 : "")),
      issues_(std::move(issues)) {}

MazeSpec parse_maze(const std::string& text) {
  std::vector<std::string> issues;
  MazeSpec spec;
  spec.name = "unnamed";

  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  size_t first_grid_line = 0;
  if (!lines.empty() && lines[0].rfind("name:", 0) == 0) {
    std::string n = lines[0].substr(5);
    n.erase(0, n.find_first_not_of(' '));
    n.erase(n.find_last_not_of(' ') + 1);
    spec.name = n;
    first_grid_line = 1;
  }
  for (size_t i = first_grid_line; i < lines.size(); ++i) {
    if (!lines[i].empty()) spec.grid.push_back(lines[i]);
  }

  if (spec.grid.empty()) {
    throw MazeParseError({"empty maze: no grid rows"});
  }

  const int rows = spec.rows();
  const size_t width = spec.grid[0].size();
  for (int r = 0; r < rows; ++r) {
    if (spec.grid[static_cast<size_t>(r)].size() != width) {
      issues.push_back("line " + std::to_string(r + 1) + ": non-rectangular grid (row width " +
                       std::to_string(spec.grid[static_cast<size_t>(r)].size()) + " != " +
                       std::to_string(width) + ")");
    }
  }
  if (!issues.empty()) throw MazeParseError(std::move(issues));
  const int cols = spec.cols();

  int starts = 0, walkables = 0, lair_cells = 0;
  int start_r = -1, start_c = -1;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const char ch = spec.at(r, c);
      if (!is_cell_code(ch)) {
        issues.push_back("line " + std::to_string(r + 1) + ", col " + std::to_string(c + 1) +
                         ": unknown cell code '" + std::string(1, ch) + "'");
        continue;
      }
      if (ch != kWall) ++walkables;
      if (ch == kPacmanStart) {
        ++starts;
        start_r = r;
        start_c = c;
      }
      if (ch == kLair) ++lair_cells;
    }
  }
  if (walkables == 0) issues.push_back("no walkable cells");
  if (starts > 1) issues.push_back("multiple pacman starts (" + std::to_string(starts) + ")");

  // Boundary: wall everywhere except paired wrap tunnels on the left/right
  // edges. Vertical wrap is unsupported.
  if (issues.empty()) {
    for (int c = 0; c < cols; ++c) {
      if (spec.at(0, c) != kWall)
        issues.push_back("line 1, col " + std::to_string(c + 1) + ": top boundary must be wall");
      if (spec.at(rows - 1, c) != kWall)
        issues.push_back("line " + std::to_string(rows) + ", col " + std::to_string(c + 1) +
                         ": bottom boundary must be wall");
    }
    for (int r = 1; r + 1 < rows; ++r) {
      const bool left = spec.at(r, 0) != kWall;
      const bool right = spec.at(r, cols - 1) != kWall;
      if (left != right) {
        issues.push_back("line " + std::to_string(r + 1) +
                         ": unpaired wrap tunnel (both row ends must be open)");
      }
      if (left && !corridor_code(spec.at(r, 0)))
        issues.push_back("line " + std::to_string(r + 1) + ", col 1: wrap tunnel must be corridor");
      if (right && !corridor_code(spec.at(r, cols - 1)))
        issues.push_back("line " + std::to_string(r + 1) + ", col " + std::to_string(cols) +
                         ": wrap tunnel must be corridor");
    }
  }

  // Reachability of every corridor cell from the start (first walkable cell
  // when no 'P' is declared — test mazes may omit it).
  if (issues.empty()) {
    int root_r = start_r, root_c = start_c;
    if (starts == 0) {
      for (int r = 0; r < rows && root_r < 0; ++r)
        for (int c = 0; c < cols; ++c)
          if (spec.at(r, c) != kWall) {
            root_r = r;
            root_c = c;
            break;
          }
    }
    std::vector<char> seen(static_cast<size_t>(rows * cols), 0);
    std::deque<std::pair<int, int>> q;
    q.emplace_back(root_r, root_c);
    seen[static_cast<size_t>(root_r * cols + root_c)] = 1;
    while (!q.empty()) {
      auto [r, c] = q.front();
      q.pop_front();
      for (Direction d : kMoveDirections) {
        int nr = r + row_step(d);
        int nc = c + col_step(d);
        // Wrap tunnels
        if (nc < 0 && spec.at(r, 0) != kWall && spec.at(r, cols - 1) != kWall) nc = cols - 1;
        if (nc >= cols && spec.at(r, 0) != kWall && spec.at(r, cols - 1) != kWall) nc = 0;
        if (!spec.in_bounds(nr, nc) || spec.at(nr, nc) == kWall) continue;
        if (!seen[static_cast<size_t>(nr * cols + nc)]) {
          seen[static_cast<size_t>(nr * cols + nc)] = 1;
          q.emplace_back(nr, nc);
        }
      }
    }
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (corridor_code(spec.at(r, c)) && !seen[static_cast<size_t>(r * cols + c)])
          issues.push_back("line " + std::to_string(r + 1) + ", col " + std::to_string(c + 1) +
                           ": unreachable corridor cell");
    (void)lair_cells;
  }

  if (!issues.empty()) throw MazeParseError(std::move(issues));
  return spec;
}

int MazeGraph::node_at(int r, int c) const {
  if (r < 0 || c < 0 || r >= spec.rows() || c >= spec.cols()) return -1;
  return grid_index_[static_cast<size_t>(r * spec.cols() + c)];
}

int MazeGraph::degree(int node) const {
  int deg = 0;
  for (int nb : neighbors[static_cast<size_t>(node)])
    if (nb >= 0) ++deg;
  return deg;
}

int MazeGraph::start_node() const {
  if (declared_start) return *declared_start;
  return 0;  // nodes are indexed row-major, so 0 is the first walkable cell
}

int MazeGraph::ghost_spawn(int ghost_index) const {
  if (!lair_nodes.empty())
    return lair_nodes[static_cast<size_t>(ghost_index) % lair_nodes.size()];
  // Lairless maze: spawn at the node farthest from the start (lowest id on
  // ties) and treat the wait timer as a virtual lair.
  int best = 0;
  std::uint16_t best_d = 0;
  for (int n = 0; n < node_count(); ++n) {
    std::uint16_t d = path_distance(start_node(), n);
    if (d != kUnreachable && d > best_d) {
      best_d = d;
      best = n;
    }
  }
  return best;
}

int MazeGraph::lair_exit_step(int node) const {
  return exit_step_[static_cast<size_t>(node)];
}

MazeGraph build_graph(const MazeSpec& spec) {
  MazeGraph g;
  g.name = spec.name;
  g.spec = spec;
  const int rows = spec.rows(), cols = spec.cols();

  g.grid_index_.assign(static_cast<size_t>(rows * cols), -1);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const char ch = spec.at(r, c);
      if (ch == kWall) continue;
      const int id = g.node_count();
      g.grid_index_[static_cast<size_t>(r * cols + c)] = id;
      MazeNode node;
      node.row = r;
      node.col = c;
      node.has_pill = ch == kPill;
      node.has_power_pill = ch == kPowerPill;
      if (ch == kLair)
        node.kind = NodeKind::Lair;
      else if (ch == kLairDoor)
        node.kind = NodeKind::LairDoor;
      g.nodes.push_back(node);
      if (node.has_pill) g.pill_nodes.push_back(id);
      if (node.has_power_pill) g.power_pill_nodes.push_back(id);
      if (ch == kLair) g.lair_nodes.push_back(id);
      if (ch == kLairDoor) g.door_nodes.push_back(id);
      if (ch == kPacmanStart) g.declared_start = id;
    }
  }

  g.pill_index_.assign(g.nodes.size(), -1);
  g.power_index_.assign(g.nodes.size(), -1);
  for (size_t i = 0; i < g.pill_nodes.size(); ++i)
    g.pill_index_[static_cast<size_t>(g.pill_nodes[i])] = static_cast<int>(i);
  for (size_t i = 0; i < g.power_pill_nodes.size(); ++i)
    g.power_index_[static_cast<size_t>(g.power_pill_nodes[i])] = static_cast<int>(i);

  g.neighbors.assign(g.nodes.size(), {-1, -1, -1, -1});
  for (int id = 0; id < g.node_count(); ++id) {
    const auto& n = g.nodes[static_cast<size_t>(id)];
    for (Direction d : kMoveDirections) {
      int nr = n.row + row_step(d);
      int nc = n.col + col_step(d);
      if (nc < 0) nc = cols - 1;  // candidate wrap; resolves to -1 if the far side is wall
      if (nc >= cols) nc = 0;
      g.neighbors[static_cast<size_t>(id)][static_cast<unsigned>(d)] = g.node_at(nr, nc);
    }
  }

  for (int id = 0; id < g.node_count(); ++id) {
    auto& n = g.nodes[static_cast<size_t>(id)];
    if (n.kind == NodeKind::Corridor && g.degree(id) >= 3) n.kind = NodeKind::Junction;
  }

  // All-pairs distances, one BFS per source.
  const size_t n = g.nodes.size();
  g.dist_.assign(n * n, kUnreachable);
  std::vector<int> queue(n);
  for (size_t src = 0; src < n; ++src) {
    std::uint16_t* row = g.dist_.data() + src * n;
    int head = 0, tail = 0;
    queue[tail++] = static_cast<int>(src);
    row[src] = 0;
    while (head < tail) {
      const int cur = queue[head++];
      const std::uint16_t dd = row[cur];
      for (int nb : g.neighbors[static_cast<size_t>(cur)]) {
        if (nb >= 0 && row[nb] == kUnreachable) {
          row[nb] = static_cast<std::uint16_t>(dd + 1);
          queue[tail++] = nb;
        }
      }
    }
  }

  // Canned lair exit routes: each lair/door node steps toward the nearest
  // navigable node (BFS back from all navigable nodes at once).
  g.exit_step_.assign(n, -1);
  {
    std::vector<std::uint16_t> d(n, kUnreachable);
    std::deque<int> q;
    for (int id = 0; id < g.node_count(); ++id) {
      if (g.navigable(id)) {
        d[static_cast<size_t>(id)] = 0;
        q.push_back(id);
      }
    }
    while (!q.empty()) {
      int cur = q.front();
      q.pop_front();
      for (int nb : g.neighbors[static_cast<size_t>(cur)]) {
        if (nb >= 0 && d[static_cast<size_t>(nb)] == kUnreachable) {
          d[static_cast<size_t>(nb)] = static_cast<std::uint16_t>(d[static_cast<size_t>(cur)] + 1);
          q.push_back(nb);
        }
      }
    }
    for (int id = 0; id < g.node_count(); ++id) {
      if (g.navigable(id)) continue;
      int best = -1;
      std::uint16_t best_d = kUnreachable;
      for (Direction dir : kMoveDirections) {
        int nb = g.neighbor(id, dir);
        if (nb >= 0 && d[static_cast<size_t>(nb)] < best_d) {
          best_d = d[static_cast<size_t>(nb)];
          best = nb;
        }
      }
      g.exit_step_[static_cast<size_t>(id)] = best;
    }
  }

  // Longest straight walkable run, in cells. Wrap tunnels don't extend runs;
  // sight doesn't pass through them either.
  int longest = 0;
  for (int r = 0; r < rows; ++r) {
    int run = 0;
    for (int c = 0; c < cols; ++c) {
      run = spec.at(r, c) != kWall ? run + 1 : 0;
      longest = std::max(longest, run);
    }
  }
  for (int c = 0; c < cols; ++c) {
    int run = 0;
    for (int r = 0; r < rows; ++r) {
      run = spec.at(r, c) != kWall ? run + 1 : 0;
      longest = std::max(longest, run);
    }
  }
  g.longest_run_ = longest;

  return g;
}

MazeGraph load_maze_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open maze file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return build_graph(parse_maze(buf.str()));
}

namespace {

template <typename Better>
Direction pick_move(const MazeGraph& g, int from, int anchor, std::optional<Direction> forbidden,
                    Better better) {
  Direction best = Direction::Neutral;
  std::uint32_t best_d = 0;
  bool have = false;
  for (Direction d : kMoveDirections) {
    if (forbidden && d == *forbidden) continue;
    const int nb = g.neighbor(from, d);
    if (nb < 0 || !g.navigable(nb)) continue;
    const std::uint16_t dist = g.path_distance(nb, anchor);
    if (dist == kUnreachable) continue;
    if (!have || better(dist, best_d)) {
      best = d;
      best_d = dist;
      have = true;
    }
  }
  return best;
}

}  // namespace

Direction next_move_towards(const MazeGraph& g, int from, int target,
                            std::optional<Direction> forbidden) {
  if (from == target) return Direction::Neutral;
  return pick_move(g, from, target, forbidden,
                   [](std::uint32_t a, std::uint32_t b) { return a < b; });
}

Direction next_move_away_from(const MazeGraph& g, int from, int threat,
                              std::optional<Direction> forbidden) {
  return pick_move(g, from, threat, forbidden,
                   [](std::uint32_t a, std::uint32_t b) { return a > b; });
}

double metric_distance(const MazeGraph& g, int a, int b, DistanceMetric metric) {
  const auto& na = g.nodes[static_cast<size_t>(a)];
  const auto& nb = g.nodes[static_cast<size_t>(b)];
  const double dr = na.row - nb.row;
  const double dc = na.col - nb.col;
  switch (metric) {
    case DistanceMetric::Euclidean: return std::sqrt(dr * dr + dc * dc);
    case DistanceMetric::Manhattan: return std::abs(dr) + std::abs(dc);
    case DistanceMetric::Path: {
      const std::uint16_t d = g.path_distance(a, b);
      return d == kUnreachable ? -1.0 : static_cast<double>(d);
    }
  }
  return 0.0;
}

}  // namespace pacarena
