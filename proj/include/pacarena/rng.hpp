#pragma once

#include <cstdint>

namespace pacarena {

// splitmix64 stream. Hand-rolled so that draws are identical on every
// platform and stdlib; replays depend on that.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  // Uniform in [0,1), 53 bits.
  double next_float();
  // Uniform in [0,n), n > 0.
  int next_int(int n);

  // Stable sub-stream derivation: one match seed fans out into per-agent
  // streams.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
};

}  // namespace pacarena
