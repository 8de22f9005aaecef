#pragma once

#include "emhd/grid.hpp"

#include <cstdint>

namespace emhd {

/// Counter-based generator: the n-th draw of (seed, stream) is a pure function
/// of the triple, so results do not depend on call order across streams.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    std::uint64_t counter() const { return counter_; }

    static std::uint64_t hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

/// Zero-mean field with |B_hat(k)| = amplitude * k^{-decay} and uniform random
/// phases for 1 <= k <= kmax; all other modes zero.
Spectrum random_power_law(const GridSpec& g, double decay, std::size_t kmax, std::uint64_t seed,
                          std::uint64_t stream = 0, double amplitude = 1.0);

/// random_power_law rescaled to a prescribed L2 norm.
Spectrum random_with_l2(const GridSpec& g, double decay, std::size_t kmax, double l2, std::uint64_t seed,
                        std::uint64_t stream = 0);

}  // namespace emhd
