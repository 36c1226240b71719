#ifndef PREFRAT_RNG_HPP
#define PREFRAT_RNG_HPP

#include <cstdint>

namespace prefrat {

/// splitmix64 generator. Fixed algorithm so the same seed yields the same
/// instance on every platform; std::uniform_int_distribution gives no such
/// guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    bool coin() { return (next() >> 63) != 0; }

    /// Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace prefrat

#endif
