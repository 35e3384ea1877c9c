#include "meanfield/random.hpp"

namespace meanfield {

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t chain_id) {
  std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(chain_id),
                         static_cast<std::uint32_t>(chain_id >> 32), 0x6d66u};
  engine_.seed(sequence);
}

double RandomStream::gamma(double shape) {
  std::gamma_distribution<double> dist(shape, 1.0);
  return dist(engine_);
}

std::size_t RandomStream::index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(engine_);
}

} // namespace meanfield
