#include "pacarena/direction.hpp"

namespace pacarena {

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::Up: return "UP";
    case Direction::Right: return "RIGHT";
    case Direction::Down: return "DOWN";
    case Direction::Left: return "LEFT";
    case Direction::Neutral: return "NEUTRAL";
  }
  return "NEUTRAL";
}

char direction_to_char(Direction d) {
  switch (d) {
    case Direction::Up: return 'U';
    case Direction::Right: return 'R';
    case Direction::Down: return 'D';
    case Direction::Left: return 'L';
    case Direction::Neutral: return 'N';
  }
  return 'N';
}

Direction direction_from_char(char c) {
  switch (c) {
    case 'U': return Direction::Up;
    case 'R': return Direction::Right;
    case 'D': return Direction::Down;
    case 'L': return Direction::Left;
    default: return Direction::Neutral;
  }
}

int DirectionSet::size() const {
  int n = 0;
  for_each([&](Direction) { ++n; });
  return n;
}

Direction DirectionSet::first() const {
  for (Direction d : kMoveDirections)
    if (contains(d)) return d;
  return Direction::Neutral;
}

Direction DirectionSet::nth(int n) const {
  int i = 0;
  Direction out = Direction::Neutral;
  for_each([&](Direction d) {
    if (i++ == n) out = d;
  });
  return out;
}

}  // namespace pacarena
