#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pacarena/engine.hpp"

namespace pacarena {

// One line per tick:
//   tick,pacnode,pacmove,score,<node:move:edible:lair>x4,events
// recording the pre-advance state, the moves applied to it, and the events
// they produced. Events are ';'-joined tokens.
std::string serialize_replay_line(const GameState& before, const MoveSet& moves,
                                  const std::vector<GameEvent>& events);

// Completes a line serialized with no events once the tick's events are
// known; lets the match loop avoid snapshotting the pre-advance state.
std::string append_event_tokens(std::string line, const std::vector<GameEvent>& events);

std::string replay_header(const std::string& maze_name, std::uint64_t seed,
                          std::uint64_t confighash);

// Receives the header once, then every serialized tick line.
using ReplaySink = std::function<void(const std::string& line)>;

struct ReplayLine {
  long tick = 0;
  int pac_node = 0;
  Direction pac_move = Direction::Neutral;
  int score = 0;
  struct Ghost {
    int node = 0;
    Direction move = Direction::Neutral;
    int edible = 0;
    int lair = 0;
  };
  std::array<Ghost, 4> ghosts;
  std::vector<std::string> events;
};

struct ReplayDoc {
  std::string maze_name;
  std::uint64_t seed = 0;
  std::uint64_t confighash = 0;
  std::vector<ReplayLine> lines;
};

class ReplayParseError : public std::runtime_error {
 public:
  ReplayParseError(int line_no, const std::string& what)
      : std::runtime_error("replay line " + std::to_string(line_no) + ": " + what),
        line_no_(line_no) {}
  int line_no() const { return line_no_; }

 private:
  int line_no_;
};

ReplayDoc parse_replay(const std::string& text);

struct ReplayVerification {
  bool ok = false;
  bool rejected = false;  // maze/config hash mismatch; nothing was replayed
  long first_divergence = -1;
  int final_score = 0;
  std::string message;
};

// Re-simulates the recorded moves and compares every recorded field.
// A confighash mismatch rejects the replay outright.
ReplayVerification verify_replay(const ReplayDoc& doc, const std::vector<MazeGraph>& mazes,
                                 const RuleConfig& config);

// Re-runs the recorded moves, returning the state after every tick.
std::vector<GameState> replay_trace(const ReplayDoc& doc, const std::vector<MazeGraph>& mazes,
                                    const RuleConfig& config);

}  // namespace pacarena
