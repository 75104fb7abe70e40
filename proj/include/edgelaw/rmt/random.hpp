#pragma once

#include <cstdint>

#include "edgelaw/rmt/philox.hpp"

namespace edgelaw::rmt {

/// Deterministic variate stream: Philox4x32-10 keyed by the seed, with the
/// stream index in the upper counter words and a block index in the lower.
/// Every (seed, stream) pair is an independent, platform-stable sequence.
class Stream {
 public:
  explicit Stream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint32_t next_u32();
  double uniform();           // [0, 1), 53 bits
  double uniform_open();      // (0, 1)
  double normal();            // N(0,1), polar Box–Muller
  double gamma(double shape);  // Gamma(shape, 1), Marsaglia–Tsang
  double chi(double dof);      // √χ²(dof)

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  int used_ = 4;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace edgelaw::rmt
