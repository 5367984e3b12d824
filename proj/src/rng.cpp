#include "icc/rng.hpp"

#include "icc/stats.hpp"

namespace icc {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = base;
  std::uint64_t out = splitmix64(state);
  for (std::uint64_t p : path) {
    state ^= p + 0x9e3779b97f4a7c15ULL + (out << 6) + (out >> 2);
    out = splitmix64(state);
  }
  return out;
}

RngStream::RngStream(std::uint64_t seed) : engine_(seed) {}

double RngStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open01() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
  return normal_quantile(uniform_open01());
}

}  // namespace icc
