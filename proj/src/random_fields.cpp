#include "emhd/random_fields.hpp"

#include "emhd/spectral.hpp"

#include <cmath>
#include <numbers>

namespace emhd {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t CounterRng::hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

std::uint64_t CounterRng::next_u64() { return hash(seed_, stream_, counter_++); }

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

Spectrum random_power_law(const GridSpec& g, double decay, std::size_t kmax, std::uint64_t seed,
                          std::uint64_t stream, double amplitude) {
    Spectrum s(g);
    CounterRng rng(seed, stream);
    const std::size_t top = std::min(kmax, g.nyquist() - 1);
    for (std::size_t k = 1; k <= top; ++k) {
        const double phase = 2.0 * std::numbers::pi * rng.uniform();
        s[k] = std::polar(amplitude * std::pow(static_cast<double>(k), -decay), phase);
    }
    return s;
}

Spectrum random_with_l2(const GridSpec& g, double decay, std::size_t kmax, double l2, std::uint64_t seed,
                        std::uint64_t stream) {
    Spectrum s = random_power_law(g, decay, kmax, seed, stream);
    const double norm = l2_norm(s);
    if (norm > 0.0) s *= l2 / norm;
    return s;
}

}  // namespace emhd
