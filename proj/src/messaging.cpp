#include "pacarena/messaging.hpp"

#include <algorithm>

namespace pacarena {

long delivery_tick(const MessagingConfig& cfg, MessageType type, long t_a) {
  return t_a + cfg.delta_c +
         static_cast<long>(cfg.delta_x) * cfg.delta_m[static_cast<size_t>(type)];
}

long Messenger::send(const Message& msg, long now) {
  Message m = msg;
  m.tick = now;
  const long t_d = delivery_tick(cfg_, m.type, now);
  if (m.recipient) {
    queue_.push_back({t_d, seq_++, *m.recipient, m});
    ++sent_;
  } else {
    for (GhostIdentity g : kGhostOrder) {
      if (g == m.sender) continue;  // broadcast excludes the sender
      queue_.push_back({t_d, seq_++, g, m});
      ++sent_;
    }
  }
  return t_d;
}

std::vector<Message> Messenger::collect(GhostIdentity recipient, long now) {
  std::vector<Message> out;
  std::vector<Pending> due;
  auto it = std::stable_partition(queue_.begin(), queue_.end(), [&](const Pending& p) {
    return !(p.to == recipient && p.t_d <= now);
  });
  due.assign(std::make_move_iterator(it), std::make_move_iterator(queue_.end()));
  queue_.erase(it, queue_.end());
  std::stable_sort(due.begin(), due.end(), [](const Pending& a, const Pending& b) {
    return a.t_d != b.t_d ? a.t_d < b.t_d : a.seq < b.seq;
  });
  out.reserve(due.size());
  for (auto& p : due) out.push_back(p.msg);
  delivered_ += static_cast<long>(out.size());
  return out;
}

void Messenger::reset() {
  cleared_ += static_cast<long>(queue_.size());
  queue_.clear();
}

}  // namespace pacarena
