#pragma once

#include <optional>
#include <vector>

#include "pacarena/config.hpp"
#include "pacarena/engine.hpp"

namespace pacarena {

// Can `target` be seen from `observer_node` under the model? LOS runs along
// unobstructed grid rows/columns (walls block, agents and pills don't; wrap
// tunnels don't carry sight); FORWARD_LOS restricts to the ray the observer
// is facing; RADIUS ignores walls entirely.
bool visible(const VisibilityModel& model, const MazeGraph& g, int observer_node,
             Direction observer_dir, int target_node);

enum class PillKnowledge : std::uint8_t { Unknown, Present, Eaten };

struct GhostSight {
  int node = -1;
  Direction dir = Direction::Neutral;
  bool edible = false;
  bool in_lair = false;
};

// The projection of the ground truth handed to one controller. Absent
// optionals are unobserved, never guessed.
struct AgentView {
  bool observer_is_pacman = true;
  GhostIdentity observer_ghost = GhostIdentity::Blinky;

  int own_node = -1;
  Direction own_dir = Direction::Neutral;
  long tick = 0;
  int score = 0;
  int level = 1;
  int lives = 0;

  bool self_edible = false;  // ghost observers only
  bool requires_action = false;  // filled by the match loop for ghosts

  const MazeGraph* maze = nullptr;

  std::optional<int> pacman_node;
  std::array<std::optional<GhostSight>, 4> ghosts;
  std::vector<PillKnowledge> pills;        // parallel to maze->pill_nodes
  std::vector<PillKnowledge> power_pills;  // parallel to maze->power_pill_nodes
};

AgentView make_view(const VisibilityModel& model, const GameState& s, bool pacman_observer,
                    GhostIdentity ghost = GhostIdentity::Blinky);

// Precomputed per-node visibility sets; the per-tick fast path. Produces
// bit-for-bit the same answers as visible().
class VisibilityIndex {
 public:
  VisibilityIndex() = default;
  VisibilityIndex(const VisibilityModel& model, const MazeGraph& g);

  bool test(int observer_node, Direction observer_dir, int target_node) const;

  // Same result as the make_view above, reusing `out` buffers.
  void fill_view(const GameState& s, bool pacman_observer, GhostIdentity ghost,
                 AgentView& out) const;

 private:
  const MazeGraph* graph_ = nullptr;
  VisibilityModel model_;
  bool directional_ = false;  // FORWARD_LOS keeps one set per direction
  size_t words_ = 0;
  std::vector<std::uint64_t> bits_;  // [node (x dir)] -> bitset over nodes

  const std::uint64_t* row(int node, Direction dir) const;
};

}  // namespace pacarena
