#include "pacarena/rng.hpp"

namespace pacarena {

std::uint64_t Rng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::next_float() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int Rng::next_int(int n) {
  return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  Rng mix(seed ^ (0xa0761d6478bd642fULL * (stream + 1)));
  return mix.next_u64();
}

}  // namespace pacarena
