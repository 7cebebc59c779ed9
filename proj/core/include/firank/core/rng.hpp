#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace firank {

/// Seed for every randomized operation. Same seed, same bits.
struct RngSeed {
    std::uint64_t value = 42;
};

/// mt19937_64 with distribution code written out so results do not depend on
/// the standard library's (implementation-defined) distributions.
class Rng {
public:
    explicit Rng(RngSeed seed) : engine_(seed.value) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Standard normal via Box-Muller (caches the second variate).
    double normal();

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace firank
