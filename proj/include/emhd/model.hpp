#pragma once

#include <string>

namespace emhd {

/// Member of the family B_t + a B J_x + b J B_x + mu Lambda^alpha B = 0, B_x = H J.
struct ModelParams {
    double a = 0.0;
    double b = 1.0;
    double alpha = 1.5;
    double mu = 1.0;

    /// "e1d2" (a=1,b=0), "e1d3" (a=0,b=1), "e1d4" (a=0,b=-1).
    static ModelParams preset(const std::string& name, double alpha, double mu);
    static ModelParams full(double a, double b, double alpha, double mu) { return {a, b, alpha, mu}; }

    /// Throws std::invalid_argument on alpha < 0, mu < 0 or non-finite entries.
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

}  // namespace emhd
