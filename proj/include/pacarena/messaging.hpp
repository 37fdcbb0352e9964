#pragma once

#include <optional>
#include <vector>

#include "pacarena/config.hpp"
#include "pacarena/engine.hpp"

namespace pacarena {

enum class MessageType : std::uint8_t { PacmanSeen = 0, IAm = 1, IAmHeading = 2 };

// Ghost-to-ghost message with a single integer payload: a node index for
// PACMAN_SEEN / I_AM, a direction ordinal (UP=0 RIGHT=1 DOWN=2 LEFT=3) for
// I_AM_HEADING.
struct Message {
  GhostIdentity sender = GhostIdentity::Blinky;
  std::optional<GhostIdentity> recipient;  // nullopt = broadcast
  MessageType type = MessageType::PacmanSeen;
  int data = 0;
  long tick = 0;  // send tick t_a
};

// t_d = t_a + delta_c + delta_x * delta_m(type)
long delivery_tick(const MessagingConfig& cfg, MessageType type, long t_a);

// Delayed-delivery queue. Broadcasts fan out to the three other ghosts at
// send time, so each copy is delivered exactly once. Sending is free.
class Messenger {
 public:
  Messenger() = default;
  explicit Messenger(MessagingConfig cfg) : cfg_(cfg) {}

  // Enqueues and returns the scheduled delivery tick.
  long send(const Message& msg, long now);

  // Every pending copy addressed to `recipient` with t_d <= now, ordered by
  // delivery tick then send order. Returned copies are removed.
  std::vector<Message> collect(GhostIdentity recipient, long now);

  void reset();

  // Conservation counters (copies, i.e. broadcasts count once per recipient).
  long copies_sent() const { return sent_; }
  long copies_delivered() const { return delivered_; }
  long copies_cleared() const { return cleared_; }
  long copies_pending() const { return static_cast<long>(queue_.size()); }

 private:
  struct Pending {
    long t_d;
    long seq;
    GhostIdentity to;
    Message msg;
  };
  MessagingConfig cfg_;
  std::vector<Pending> queue_;
  long seq_ = 0;
  long sent_ = 0, delivered_ = 0, cleared_ = 0;
};

}  // namespace pacarena
