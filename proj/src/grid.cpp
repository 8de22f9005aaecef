#include "emhd/grid.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace emhd {

GridSpec GridSpec::make(std::size_t n, double L) {
    if (n < 4 || !std::has_single_bit(n))
        throw std::invalid_argument("grid: n_modes must be a power of two >= 4, got " + std::to_string(n));
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::invalid_argument("grid: half_length must be positive and finite");
    return GridSpec{n, L};
}

std::vector<double> GridSpec::points() const {
    std::vector<double> xs(n_modes);
    for (std::size_t j = 0; j < n_modes; ++j) xs[j] = x(j);
    return xs;
}

Field::Field(const GridSpec& g, std::vector<double> s) : grid(g), samples(std::move(s)) {
    if (samples.size() != g.n_modes)
        throw std::invalid_argument("field: sample count " + std::to_string(samples.size()) +
                                    " does not match grid size " + std::to_string(g.n_modes));
}

Spectrum::Spectrum(const GridSpec& g, std::vector<cplx> c) : grid(g), coeffs(std::move(c)) {
    if (coeffs.size() != g.spectrum_size())
        throw std::invalid_argument("spectrum: coefficient count " + std::to_string(coeffs.size()) +
                                    " does not match grid (expected " + std::to_string(g.spectrum_size()) + ")");
}

cplx Spectrum::mode(long k) const {
    const auto ak = static_cast<std::size_t>(k < 0 ? -k : k);
    if (ak >= coeffs.size()) return {};
    return k < 0 ? std::conj(coeffs[ak]) : coeffs[ak];
}

Spectrum& Spectrum::operator+=(const Spectrum& o) {
    require_same_grid(grid, o.grid, "spectrum +=");
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += o.coeffs[k];
    return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& o) {
    require_same_grid(grid, o.grid, "spectrum -=");
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] -= o.coeffs[k];
    return *this;
}

Spectrum& Spectrum::operator*=(double s) {
    for (auto& c : coeffs) c *= s;
    return *this;
}

Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
Spectrum operator-(Spectrum a, const Spectrum& b) { return a -= b; }
Spectrum operator*(double s, Spectrum a) { return a *= s; }

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
    if (!(a == b))
        throw std::invalid_argument(std::string(where) + ": grid mismatch (" + std::to_string(a.n_modes) +
                                    " vs " + std::to_string(b.n_modes) + " modes)");
}

}  // namespace emhd
