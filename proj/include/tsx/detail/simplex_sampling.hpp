#pragma once

#include <cmath>
#include <random>
#include <vector>

namespace tsx {

template <typename Rng>
std::vector<double> random_simplex_point(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> p(n);
    const bool sparse = n > 1 && unit(rng) < 0.25;
    double total = 0.0;
    for (auto& x : p) {
        x = -std::log1p(-unit(rng));  // Exp(1)
        if (sparse && unit(rng) < 0.5) x = 0.0;
        total += x;
    }
    if (total == 0.0) {
        p[0] = 1.0;
        return p;
    }
    for (auto& x : p) x /= total;
    return p;
}

}  // namespace tsx
