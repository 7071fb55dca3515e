#pragma once

#include <cstdint>

namespace approxseq::detail {

/// splitmix64: small, fast, and identical on every platform, which keeps
/// seeded runs byte-reproducible across compilers.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Inclusive range draw.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::uint64_t state_;
};

} // namespace approxseq::detail
