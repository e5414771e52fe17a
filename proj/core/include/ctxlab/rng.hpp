#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace ctxlab {

// Deterministic, serializable RNG (xoshiro256**). The standard <random>
// distributions are implementation-defined, so every draw used by the
// artifact goes through this class to keep runs bit-reproducible.
//
// All randomness in a run flows from one root seed; independent consumers
// (t' sampling, position sampling, data generation, ...) take named
// substreams so adding a consumer never shifts another's stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Derive an independent stream from a root seed and a stream name.
  static Rng substream(std::uint64_t root_seed, std::string_view name);

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01();

  // Uniform real in [lo, hi].
  double uniform(double lo, double hi);

  // Uniform integer in [lo, hi] inclusive, rejection-sampled (no modulo bias).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Standard normal via Box-Muller with a cached spare.
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  std::array<std::uint64_t, 4> state() const { return s_; }
  bool has_spare() const { return has_spare_; }
  double spare() const { return spare_; }
  void restore(const std::array<std::uint64_t, 4>& s, bool has_spare, double spare);

 private:
  std::array<std::uint64_t, 4> s_{};
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ctxlab
