#pragma once

#include <cstdint>
#include <random>

namespace splitmerge {

// Reproducible uniform randomness keyed by (seed, stream_id). Identical keys
// replay identical draws; distinct stream ids are used for independent
// replicas. mt19937_64 is pinned by the standard, and uniforms are built from
// raw 64-bit words rather than std::uniform_*_distribution (whose output is
// implementation defined), so replay holds across toolchains.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id),
                      static_cast<std::uint32_t>(stream_id >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, ..., bound-1}, unbiased via rejection.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t reject = (-bound) % bound;  // 2^64 mod bound
    std::uint64_t v = engine_();
    while (v < reject) v = engine_();
    return v % bound;
  }

 private:
  std::uint64_t seed_, stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace splitmerge
