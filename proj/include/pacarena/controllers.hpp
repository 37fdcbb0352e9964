#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pacarena/messaging.hpp"
#include "pacarena/observability.hpp"
#include "pacarena/rng.hpp"

namespace pacarena {

// Knobs shared by the reference controllers, lifted from RuleConfig.
struct ControllerParams {
  int ppill_proximity = 15;  // "pacman close to a power pill" radius
  int pogc_threshold = 50;   // POGC memory staleness, ticks

  static ControllerParams from_config(const RuleConfig& cfg) {
    return {cfg.ctrl_ppill_proximity, cfg.pogc_threshold};
  }
};

class PacmanController {
 public:
  virtual ~PacmanController() = default;
  virtual void reset(std::uint64_t seed) { (void)seed; }
  virtual Direction move(const AgentView& view, std::chrono::nanoseconds budget) = 0;
};

class GhostController {
 public:
  virtual ~GhostController() = default;
  virtual void reset(std::uint64_t seed) { (void)seed; }
  virtual Direction move(const AgentView& view, Messenger& messenger,
                         std::chrono::nanoseconds budget) = 0;
};

struct GhostTeam {
  std::string name;
  std::array<std::unique_ptr<GhostController>, 4> members;  // Blinky..Sue
};

// Registry. Built-ins: COP, POP, RANDOM_P / COG, POG, POGC, RANDOM_G.
// Third-party controllers register through the same factories.
using PacmanFactory = std::function<std::unique_ptr<PacmanController>(const ControllerParams&)>;
using GhostTeamFactory = std::function<GhostTeam(const ControllerParams&)>;

void register_pacman_controller(const std::string& name, PacmanFactory factory);
void register_ghost_team(const std::string& name, GhostTeamFactory factory);
bool is_pacman_controller(const std::string& name);
bool is_ghost_team(const std::string& name);
std::vector<std::string> pacman_controller_names();
std::vector<std::string> ghost_team_names();

// Throws ConfigError for unknown names.
std::unique_ptr<PacmanController> make_pacman_controller(const std::string& name,
                                                         const ControllerParams& params);
GhostTeam make_ghost_team(const std::string& name, const ControllerParams& params);

struct PollOutcome {
  std::array<Direction, 4> moves{Direction::Neutral, Direction::Neutral, Direction::Neutral,
                                 Direction::Neutral};
  int overruns = 0;
};

// Polls Blinky, Pinky, Inky, Sue in that order against one shared
// wall-clock budget. A controller that overruns what is left has its move
// replaced by NEUTRAL (logged); once the budget is gone the rest are not
// called. With enforce=false the clock is never read and every move is
// honored. A throwing controller yields NEUTRAL and the match continues.
PollOutcome budgeted_poll(GhostTeam& team, const std::array<AgentView, 4>& views,
                          Messenger& messenger, std::chrono::milliseconds budget, bool enforce);

}  // namespace pacarena
