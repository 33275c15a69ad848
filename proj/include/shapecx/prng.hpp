/**
 * Deterministic PRNG used by the randomized tests and the CLI.
 *
 * SplitMix64 is tiny, seedable and fully specified, so identical seeds
 * reproduce identical fixtures on every platform.  The standard
 * distributions are avoided on purpose: their outputs are not pinned by
 * the standard, which would break cross-platform determinism.
 */

#ifndef SHAPECX_PRNG_HPP
#define SHAPECX_PRNG_HPP

#include <cstdint>

namespace shapecx {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /** Uniform integer in [0, bound), bound > 0.  Rejection-free modulo
     *  reduction is fine here: bounds are tiny against 2^64 and statistical
     *  perfection is not a goal, determinism is. */
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /** Uniform integer in [lo, hi] inclusive. */
    std::int64_t range(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(
                        static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

  private:
    std::uint64_t state_;
};

}   // namespace shapecx

#endif
