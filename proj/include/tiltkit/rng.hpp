// Counter-based deterministic RNG: SplitMix64 applied to (seed, counter).
#pragma once

#include <cstdint>

namespace tiltkit {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream i of a seed is independent of calls made on other streams; every draw
// is a pure function of (seed, counter), so replay is exact.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(splitmix64(seed ^ (0x6a09e667f3bcc909ULL * (stream + 1)))), counter_(0) {}

    std::uint64_t next() { return splitmix64(seed_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // Uniform integer in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

}  // namespace tiltkit
