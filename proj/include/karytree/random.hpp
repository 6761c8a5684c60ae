#pragma once

#include <cstdint>

namespace karytree {

/// Identifies one reproducible pseudo-random stream. Experiments derive one
/// stream per sample so results do not depend on scheduling.
struct SeedSpec
{
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    friend auto operator==(const SeedSpec &, const SeedSpec &) -> bool = default;
};

/// The splitmix64 finaliser.
constexpr auto mix64(std::uint64_t z) -> std::uint64_t
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// splitmix64: state advances by the golden gamma, output is mix64(state).
/// Platform-stable by construction (only 64-bit unsigned arithmetic).
class SplitMix64
{
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t state) : _state(state) {}

    explicit constexpr SplitMix64(const SeedSpec & seed) :
        _state(mix64(mix64(seed.master_seed) ^ (seed.stream_index * 0x9e3779b97f4a7c15ULL + 0xd1b54a32d192ed03ULL)))
    {
    }

    static constexpr auto min() -> result_type { return 0; }
    static constexpr auto max() -> result_type { return ~result_type{0}; }

    constexpr auto operator()() -> result_type
    {
        _state += 0x9e3779b97f4a7c15ULL;
        return mix64(_state);
    }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    constexpr auto below(std::uint64_t bound) -> std::uint64_t
    {
        std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do
            x = (*this)();
        while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t _state;
};

/// Seed for sample `index` of a sub-experiment identified by `tag` (for
/// example an order n). Used where more than one index dimension exists.
constexpr auto derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t index) -> SeedSpec
{
    return SeedSpec{mix64(master ^ mix64(tag + 0x632be59bd9b4e019ULL)), index};
}

}
