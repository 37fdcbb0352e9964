#include "pacarena/replay.hpp"

#include <charconv>
#include <sstream>

namespace pacarena {

namespace {

std::string event_token(const GameEvent& e) {
  switch (e.kind) {
    case GameEvent::Kind::PillEaten: return "pill";
    case GameEvent::Kind::PowerPillEaten: return "power";
    case GameEvent::Kind::GhostEaten:
      return "ghost-eaten:" + std::string(ghost_name(e.ghost)) + ":" + std::to_string(e.points);
    case GameEvent::Kind::PacmanEaten: return "pacman-eaten";
    case GameEvent::Kind::LevelCleared: return "level-cleared";
    case GameEvent::Kind::GameOver: return "game-over";
  }
  return "?";
}

long parse_long(std::string_view s, int line_no, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ReplayParseError(line_no, std::string("bad ") + what + ": '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string replay_header(const std::string& maze_name, std::uint64_t seed,
                          std::uint64_t confighash) {
  std::ostringstream out;
  out << "maze=" << maze_name << "\nseed=" << seed << "\nconfighash=" << std::hex << confighash
      << "\n";
  return out.str();
}

std::string serialize_replay_line(const GameState& s, const MoveSet& moves,
                                  const std::vector<GameEvent>& events) {
  std::string line;
  line.reserve(96);
  line += std::to_string(s.tick);
  line += ',';
  line += std::to_string(s.pacman_node);
  line += ',';
  line += direction_to_char(moves.pacman);
  line += ',';
  line += std::to_string(s.score);
  for (size_t i = 0; i < 4; ++i) {
    const GhostState& g = s.ghosts[i];
    line += ',';
    line += std::to_string(g.node);
    line += ':';
    line += direction_to_char(moves.ghosts[i]);
    line += ':';
    line += std::to_string(g.edible_ticks);
    line += ':';
    line += std::to_string(g.lair_ticks);
  }
  line += ',';
  return append_event_tokens(std::move(line), events);
}

std::string append_event_tokens(std::string line, const std::vector<GameEvent>& events) {
  for (size_t i = 0; i < events.size(); ++i) {
    if (i) line += ';';
    line += event_token(events[i]);
  }
  return line;
}

ReplayDoc parse_replay(const std::string& text) {
  ReplayDoc doc;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_maze = false, have_seed = false, have_hash = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("maze=", 0) == 0) {
      doc.maze_name = line.substr(5);
      have_maze = true;
      continue;
    }
    if (line.rfind("seed=", 0) == 0) {
      doc.seed = static_cast<std::uint64_t>(parse_long(line.substr(5), line_no, "seed"));
      have_seed = true;
      continue;
    }
    if (line.rfind("confighash=", 0) == 0) {
      const std::string hex = line.substr(11);
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
      if (ec != std::errc() || p != hex.data() + hex.size())
        throw ReplayParseError(line_no, "bad confighash: '" + hex + "'");
      doc.confighash = v;
      have_hash = true;
      continue;
    }
    if (!have_maze || !have_seed || !have_hash)
      throw ReplayParseError(line_no, "tick line before complete header");

    const auto fields = split(line, ',');
    if (fields.size() != 9)
      throw ReplayParseError(line_no,
                             "expected 9 fields, got " + std::to_string(fields.size()));
    ReplayLine rl;
    rl.tick = parse_long(fields[0], line_no, "tick");
    rl.pac_node = static_cast<int>(parse_long(fields[1], line_no, "pacnode"));
    if (fields[2].size() != 1) throw ReplayParseError(line_no, "bad pacmove");
    rl.pac_move = direction_from_char(fields[2][0]);
    rl.score = static_cast<int>(parse_long(fields[3], line_no, "score"));
    for (size_t i = 0; i < 4; ++i) {
      const auto parts = split(fields[4 + i], ':');
      if (parts.size() != 4) throw ReplayParseError(line_no, "bad ghost field");
      rl.ghosts[i].node = static_cast<int>(parse_long(parts[0], line_no, "ghost node"));
      if (parts[1].size() != 1) throw ReplayParseError(line_no, "bad ghost move");
      rl.ghosts[i].move = direction_from_char(parts[1][0]);
      rl.ghosts[i].edible = static_cast<int>(parse_long(parts[2], line_no, "ghost edible"));
      rl.ghosts[i].lair = static_cast<int>(parse_long(parts[3], line_no, "ghost lair"));
    }
    if (!fields[8].empty())
      for (auto tok : split(fields[8], ';')) rl.events.emplace_back(tok);
    doc.lines.push_back(std::move(rl));
  }
  if (!have_maze || !have_seed || !have_hash)
    throw ReplayParseError(line_no, "incomplete header");
  return doc;
}

namespace {

// Applies one recorded line and reports the first divergent field, if any.
struct Resim {
  GameState state;

  std::string check_line(const ReplayLine& rl) const {
    if (rl.tick != state.tick) return "tick";
    if (rl.pac_node != state.pacman_node) return "pacman node";
    if (rl.score != state.score) return "score";
    for (size_t i = 0; i < 4; ++i) {
      const GhostState& g = state.ghosts[i];
      if (rl.ghosts[i].node != g.node) return "ghost node";
      if (rl.ghosts[i].edible != g.edible_ticks) return "ghost edible";
      if (rl.ghosts[i].lair != g.lair_ticks) return "ghost lair";
    }
    return "";
  }

  MoveSet moves_of(const ReplayLine& rl) const {
    MoveSet mv;
    mv.pacman = rl.pac_move;
    for (size_t i = 0; i < 4; ++i) mv.ghosts[i] = rl.ghosts[i].move;
    return mv;
  }
};

}  // namespace

ReplayVerification verify_replay(const ReplayDoc& doc, const std::vector<MazeGraph>& mazes,
                                 const RuleConfig& config) {
  ReplayVerification v;
  if (config_hash(config, mazes) != doc.confighash) {
    v.rejected = true;
    v.message = "confighash mismatch: replay was recorded against a different "
                "config or maze set";
    return v;
  }
  if (mazes.empty() || mazes[0].name != doc.maze_name) {
    v.rejected = true;
    v.message = "maze mismatch: replay was recorded on '" + doc.maze_name + "'";
    return v;
  }
  Resim sim{new_game(mazes, config, doc.seed)};
  for (const auto& rl : doc.lines) {
    const std::string bad = sim.check_line(rl);
    if (!bad.empty()) {
      v.first_divergence = rl.tick;
      v.message = "divergence at tick " + std::to_string(rl.tick) + ": " + bad;
      return v;
    }
    advance(sim.state, sim.moves_of(rl));
  }
  v.ok = true;
  v.final_score = sim.state.score;
  return v;
}

std::vector<GameState> replay_trace(const ReplayDoc& doc, const std::vector<MazeGraph>& mazes,
                                    const RuleConfig& config) {
  std::vector<GameState> trace;
  Resim sim{new_game(mazes, config, doc.seed)};
  trace.push_back(sim.state);
  for (const auto& rl : doc.lines) {
    advance(sim.state, sim.moves_of(rl));
    trace.push_back(sim.state);
  }
  return trace;
}

}  // namespace pacarena
