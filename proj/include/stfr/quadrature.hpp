#pragma once

#include <span>
#include <vector>

#include "stfr/common.hpp"
#include "stfr/time_grid.hpp"

namespace stfr {

/// Composite trapezoid rule over the grid's span. Exact for piecewise-linear
/// integrands, which matches the ingestion model (linear resampling).
inline double trapezoid_integrate(std::span<const double> values, const TimeGrid& grid) {
    require(values.size() == grid.size(),
            "trapezoid_integrate: value/grid length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        acc += 0.5 * (grid[i + 1] - grid[i]) * (values[i] + values[i + 1]);
    return acc;
}

inline double trapezoid_integrate(const std::vector<double>& values, const TimeGrid& grid) {
    return trapezoid_integrate(std::span<const double>(values), grid);
}

/// L2 inner product of two curves sampled on the same grid.
inline double inner_product(std::span<const double> f, std::span<const double> g,
                            const TimeGrid& grid) {
    require(f.size() == g.size() && f.size() == grid.size(),
            "inner_product: curves must share the grid");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        const double h = 0.5 * (grid[i + 1] - grid[i]);
        acc += h * (f[i] * g[i] + f[i + 1] * g[i + 1]);
    }
    return acc;
}

inline double inner_product(const std::vector<double>& f, const std::vector<double>& g,
                            const TimeGrid& grid) {
    return inner_product(std::span<const double>(f), std::span<const double>(g), grid);
}

} // namespace stfr
