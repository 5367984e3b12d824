#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace icc {

// SplitMix64 step; used for seed mixing so that derived streams decorrelate.
std::uint64_t splitmix64(std::uint64_t& state);

// Hash a (base seed, path of indices) pair into a child seed. Every trial,
// step and sampling role gets its own stream so any run is replayable from
// the master seed alone.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

// Stable labels for stream derivation paths.
namespace stream {
inline constexpr std::uint64_t kNoise = 0x6e6f697365ULL;
inline constexpr std::uint64_t kEig = 0x656967ULL;
inline constexpr std::uint64_t kTrial = 0x747269616cULL;
inline constexpr std::uint64_t kPropagate = 0x70726f70ULL;
}  // namespace stream

// Deterministic random stream. All variates are produced through the
// inverse-CDF so the draw sequence is identical across platforms and
// standard libraries for a given seed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform01();

  // Uniform on (0, 1); never returns an exact endpoint.
  double uniform_open01();

  // Standard normal via the normal quantile function.
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace icc
