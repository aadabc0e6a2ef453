#pragma once

#include <cstdint>
#include <random>

namespace wsn {

// splitmix64 finalizer, used to turn (seed, stream) pairs into engine seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Named sub-streams. Deployment draws only from its own stream, so two runs
// sharing a seed place the nodes identically no matter which protocol runs
// on top; that is what makes paired protocol comparisons meaningful.
enum class Stream : std::uint64_t {
    Deploy = 0,
    LeachElection = 1,
    IvcElection = 2,
    Failure = 3,
};

inline std::uint64_t substream_seed(std::uint64_t seed, Stream stream) {
    return mix64(seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(stream) + 1));
}

// mt19937_64 with explicit mappings to doubles and index ranges.
// std::uniform_real_distribution is not bit-portable across standard
// libraries, and reproducible byte-identical output is part of the contract.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n); n must be positive
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace wsn
