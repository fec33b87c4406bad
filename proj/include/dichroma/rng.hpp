#ifndef DICHROMA_RNG_HPP
#define DICHROMA_RNG_HPP

#include <cstdint>

namespace dichroma
{
    /// splitmix64 finaliser.
    constexpr auto mix64(std::uint64_t z) -> std::uint64_t
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Counter-based randomness: every object (edge, vertex, trial) draws
    /// from its own stream keyed by (seed, object index), so draws do not
    /// depend on evaluation order or worker count.
    struct RngSpec
    {
        std::uint64_t seed = 0;

        constexpr auto child(std::uint64_t index) const -> RngSpec
        {
            return RngSpec{mix64(mix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL))};
        }

        auto operator==(const RngSpec &) const -> bool = default;
    };

    /// splitmix64 sequence. Bounded draws use rejection so results are
    /// identical on every platform.
    class Stream
    {
        public:
            explicit constexpr Stream(RngSpec spec) : _state(mix64(spec.seed ^ 0x6a09e667f3bcc909ULL)) {}

            constexpr auto next() -> std::uint64_t
            {
                _state += 0x9e3779b97f4a7c15ULL;
                return mix64(_state);
            }

            constexpr auto coin() -> bool { return next() >> 63; }

            /// Uniform in [0, bound); bound must be positive.
            constexpr auto below(std::uint64_t bound) -> std::uint64_t
            {
                std::uint64_t threshold = (0 - bound) % bound;
                for (;;) {
                    auto r = next();
                    if (r >= threshold)
                        return r % bound;
                }
            }

            /// Uniform in [0, 1).
            constexpr auto unit() -> double { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

        private:
            std::uint64_t _state;
    };
}

#endif
