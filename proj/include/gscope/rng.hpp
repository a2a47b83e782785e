#pragma once

#include <cstdint>
#include <random>

namespace gscope {

// Deterministic RNG wrapper. std::mt19937_64 has a portable output sequence;
// the standard distributions do not, so bounded draws are done by rejection here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    // Independent child stream for task `index` of a parallel scan. Derived from
    // the original seed only, so forks are identical no matter how much the
    // parent stream has been consumed.
    Rng fork(std::uint64_t index) const {
        std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return Rng(z ^ (z >> 31));
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace gscope
