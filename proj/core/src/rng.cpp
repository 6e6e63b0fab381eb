#include "prochouse/rng.hpp"

#include <cmath>

namespace prochouse {

double Rng::normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

double Rng::gamma(double shape) {
    if (shape < 1.0) {
        const double u = 1.0 - uniform();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = 1.0 - uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

size_t Rng::pick_weighted(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double t = uniform() * total;
    for (size_t i = 0; i < weights.size(); ++i) {
        t -= weights[i];
        if (t < 0.0) return i;
    }
    return weights.size() - 1;
}

}  // namespace prochouse
