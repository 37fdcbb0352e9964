#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace pacarena {

// Canonical order UP < RIGHT < DOWN < LEFT; every tie-break in the project
// relies on it.
enum class Direction : std::uint8_t { Up = 0, Right = 1, Down = 2, Left = 3, Neutral = 4 };

inline constexpr std::array<Direction, 4> kMoveDirections = {
    Direction::Up, Direction::Right, Direction::Down, Direction::Left};

constexpr Direction reverse(Direction d) {
  switch (d) {
    case Direction::Up: return Direction::Down;
    case Direction::Right: return Direction::Left;
    case Direction::Down: return Direction::Up;
    case Direction::Left: return Direction::Right;
    case Direction::Neutral: return Direction::Neutral;
  }
  return Direction::Neutral;
}

constexpr int row_step(Direction d) {
  return d == Direction::Up ? -1 : (d == Direction::Down ? 1 : 0);
}

constexpr int col_step(Direction d) {
  return d == Direction::Left ? -1 : (d == Direction::Right ? 1 : 0);
}

std::string_view direction_name(Direction d);
char direction_to_char(Direction d);
// Accepts U/R/D/L/N, returns Neutral for anything else.
Direction direction_from_char(char c);

// Small set of directions packed into one byte; iteration follows the
// canonical order.
class DirectionSet {
 public:
  constexpr DirectionSet() = default;

  constexpr void add(Direction d) { bits_ |= mask(d); }
  constexpr void remove(Direction d) { bits_ &= static_cast<std::uint8_t>(~mask(d)); }
  constexpr bool contains(Direction d) const { return (bits_ & mask(d)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

  int size() const;
  // First member in canonical order (Neutral last); Neutral if empty.
  Direction first() const;
  // nth member in canonical order, n < size().
  Direction nth(int n) const;

  template <typename F>
  void for_each(F&& f) const {
    for (Direction d : kMoveDirections)
      if (contains(d)) f(d);
    if (contains(Direction::Neutral)) f(Direction::Neutral);
  }

  friend constexpr bool operator==(DirectionSet a, DirectionSet b) { return a.bits_ == b.bits_; }

 private:
  static constexpr std::uint8_t mask(Direction d) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(d));
  }
  std::uint8_t bits_ = 0;
};

}  // namespace pacarena
