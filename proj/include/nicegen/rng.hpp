#ifndef NICEGEN_RNG_HPP
#define NICEGEN_RNG_HPP

#include <cstdint>

namespace nicegen {

/// SplitMix64 (Steele, Lea & Flood): state advances by the golden-ratio
/// increment and each output is a finalizer of the state. Identical seeds
/// give identical streams on every platform, and child seeds for batch
/// generation are simply successive outputs of the parent stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [lo, hi] via rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return lo + static_cast<std::int64_t>(r % span);
    }

    /// Nonzero draw from [-bound, bound].
    std::int64_t nonzero_int(std::int64_t bound) {
        std::int64_t v = uniform_int(1, bound);
        return coin_flip() ? v : -v;
    }

    bool coin_flip() { return (next() & 1) != 0; }

    /// Child seed for index k: the (k+1)-th output of a stream seeded with
    /// `seed`. Used to derive per-bundle seeds for --count batches.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed);
        std::uint64_t v = 0;
        for (std::uint64_t k = 0; k <= index; ++k) v = g.next();
        return v;
    }

private:
    std::uint64_t state_;
};

}  // namespace nicegen

#endif
