#include "pacarena/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace pacarena {

namespace {

int to_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not an integer: '" + v + "'");
  }
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not a number: '" + v + "'");
  }
}

int to_nonneg(const std::string& key, const std::string& v) {
  int x = to_int(key, v);
  if (x < 0) throw ConfigError("config key '" + key + "': must be non-negative");
  return x;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

int RuleConfig::edible_duration_for_level(int level) const {
  double d = edible_duration;
  for (int i = 1; i < level; ++i) d *= edible_level_factor;
  return static_cast<int>(std::floor(d));
}

void apply_config_entry(RuleConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "lives") cfg.lives = to_nonneg(key, value);
  else if (key == "pill.score") cfg.pill_score = to_int(key, value);
  else if (key == "powerpill.score") cfg.power_pill_score = to_int(key, value);
  else if (key == "ghost.score.base") cfg.ghost_score_base = to_int(key, value);
  else if (key == "edible.duration") cfg.edible_duration = to_nonneg(key, value);
  else if (key == "edible.level_factor") cfg.edible_level_factor = to_double(key, value);
  else if (key == "lair.wait") cfg.lair_wait = to_nonneg(key, value);
  else if (key == "lair.exit.blinky") cfg.lair_exit[0] = to_nonneg(key, value);
  else if (key == "lair.exit.pinky") cfg.lair_exit[1] = to_nonneg(key, value);
  else if (key == "lair.exit.inky") cfg.lair_exit[2] = to_nonneg(key, value);
  else if (key == "lair.exit.sue") cfg.lair_exit[3] = to_nonneg(key, value);
  else if (key == "level.tick_limit") cfg.level_tick_limit = to_nonneg(key, value);
  else if (key == "level.max") cfg.max_levels = to_nonneg(key, value);
  else if (key == "po.model") {
    if (value == "full") cfg.po.kind = VisModelKind::Full;
    else if (value == "los") cfg.po.kind = VisModelKind::Los;
    else if (value == "forward_los") cfg.po.kind = VisModelKind::ForwardLos;
    else if (value == "radius") cfg.po.kind = VisModelKind::Radius;
    else throw ConfigError("config key 'po.model': unknown model '" + value + "'");
  } else if (key == "po.range") cfg.po.range = to_nonneg(key, value);
  else if (key == "po.metric") {
    if (value == "euclidean") cfg.po.metric = DistanceMetric::Euclidean;
    else if (value == "manhattan") cfg.po.metric = DistanceMetric::Manhattan;
    else throw ConfigError("config key 'po.metric': unknown metric '" + value + "'");
  } else if (key == "po.d") {
    cfg.po.d = to_double(key, value);
    if (cfg.po.d <= 0) throw ConfigError("config key 'po.d': must be positive");
  } else if (key == "msg.delta_c") cfg.msg.delta_c = to_nonneg(key, value);
  else if (key == "msg.delta_x") cfg.msg.delta_x = to_nonneg(key, value);
  else if (key == "msg.delta_m.pacman_seen") cfg.msg.delta_m[0] = to_nonneg(key, value);
  else if (key == "msg.delta_m.i_am") cfg.msg.delta_m[1] = to_nonneg(key, value);
  else if (key == "msg.delta_m.i_am_heading") cfg.msg.delta_m[2] = to_nonneg(key, value);
  else if (key == "ctrl.ppill_proximity") cfg.ctrl_ppill_proximity = to_nonneg(key, value);
  else if (key == "pogc.threshold") cfg.pogc_threshold = to_nonneg(key, value);
  else if (key == "budget.ms") cfg.budget_ms = to_nonneg(key, value);
  else throw ConfigError("unknown config key '" + key + "'");
}

RuleConfig parse_rule_config(const std::string& text) {
  RuleConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

RuleConfig load_rule_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_rule_config(buf.str());
}

std::string canonical_config_text(const RuleConfig& c) {
  std::ostringstream out;
  out << "budget.ms=" << c.budget_ms << '\n';
  out << "ctrl.ppill_proximity=" << c.ctrl_ppill_proximity << '\n';
  out << "edible.duration=" << c.edible_duration << '\n';
  out << "edible.level_factor=" << c.edible_level_factor << '\n';
  out << "ghost.score.base=" << c.ghost_score_base << '\n';
  out << "lair.exit.blinky=" << c.lair_exit[0] << '\n';
  out << "lair.exit.inky=" << c.lair_exit[2] << '\n';
  out << "lair.exit.pinky=" << c.lair_exit[1] << '\n';
  out << "lair.exit.sue=" << c.lair_exit[3] << '\n';
  out << "lair.wait=" << c.lair_wait << '\n';
  out << "level.max=" << c.max_levels << '\n';
  out << "level.tick_limit=" << c.level_tick_limit << '\n';
  out << "lives=" << c.lives << '\n';
  out << "msg.delta_c=" << c.msg.delta_c << '\n';
  out << "msg.delta_m.i_am=" << c.msg.delta_m[1] << '\n';
  out << "msg.delta_m.i_am_heading=" << c.msg.delta_m[2] << '\n';
  out << "msg.delta_m.pacman_seen=" << c.msg.delta_m[0] << '\n';
  out << "msg.delta_x=" << c.msg.delta_x << '\n';
  out << "pill.score=" << c.pill_score << '\n';
  switch (c.po.kind) {
    case VisModelKind::Full: out << "po.model=full\n"; break;
    case VisModelKind::Los: out << "po.model=los\n"; break;
    case VisModelKind::ForwardLos: out << "po.model=forward_los\n"; break;
    case VisModelKind::Radius: out << "po.model=radius\n"; break;
  }
  out << "po.d=" << c.po.d << '\n';
  out << "po.metric=" << (c.po.metric == DistanceMetric::Manhattan ? "manhattan" : "euclidean")
      << '\n';
  out << "po.range=" << c.po.range << '\n';
  out << "pogc.threshold=" << c.pogc_threshold << '\n';
  out << "powerpill.score=" << c.power_pill_score << '\n';
  return out.str();
}

std::uint64_t config_hash(const RuleConfig& cfg, const std::vector<MazeGraph>& mazes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  mix(canonical_config_text(cfg));
  for (const auto& m : mazes) mix(m.spec.canonical_text());
  return h;
}

}  // namespace pacarena
