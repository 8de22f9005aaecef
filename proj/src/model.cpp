#include "emhd/model.hpp"

#include <cmath>
#include <stdexcept>

namespace emhd {

ModelParams ModelParams::preset(const std::string& name, double alpha, double mu) {
    if (name == "e1d2") return {1.0, 0.0, alpha, mu};
    if (name == "e1d3") return {0.0, 1.0, alpha, mu};
    if (name == "e1d4") return {0.0, -1.0, alpha, mu};
    throw std::invalid_argument("unknown model preset '" + name + "' (e1d2|e1d3|e1d4)");
}

void ModelParams::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(alpha) || !std::isfinite(mu))
        throw std::invalid_argument("model parameters must be finite");
    if (alpha < 0.0) throw std::invalid_argument("model: alpha must be >= 0");
    if (mu < 0.0) throw std::invalid_argument("model: mu must be >= 0");
}

}  // namespace emhd
