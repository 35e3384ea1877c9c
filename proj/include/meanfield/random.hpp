#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace meanfield {

/// Seeded pseudo-random stream. Streams for distinct (seed, chain_id) pairs
/// are seeded through std::seed_seq and are reproducible on a fixed build.
class RandomStream {
public:
  RandomStream(std::uint64_t seed, std::uint64_t chain_id);

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1).
  double uniform_open() {
    return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
  }
  double normal() { return normal_(engine_); }
  double gamma(double shape);
  /// Uniform index in [0, n).
  std::size_t index(std::size_t n);
  bool coin() { return (engine_() >> 63) != 0; }

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

} // namespace meanfield
