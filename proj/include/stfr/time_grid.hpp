#pragma once

#include <cmath>
#include <vector>

#include "stfr/common.hpp"

namespace stfr {

/// Ordered measuring times within a compact interval.
class TimeGrid {
public:
    TimeGrid() = default;

    TimeGrid(std::vector<double> points, double interval_min, double interval_max)
        : points_(std::move(points)), lo_(interval_min), hi_(interval_max) {
        require(points_.size() >= 2, "TimeGrid: need at least 2 points");
        require(lo_ < hi_, "TimeGrid: empty interval");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            require(std::isfinite(points_[i]), "TimeGrid: non-finite point");
            require(points_[i] >= lo_ && points_[i] <= hi_,
                    "TimeGrid: point outside declared interval");
            if (i > 0)
                require(points_[i] > points_[i - 1], "TimeGrid: points not strictly increasing");
        }
    }

    /// Convenience constructor: interval bounds taken from the endpoints.
    explicit TimeGrid(std::vector<double> points)
        : TimeGrid(checked_front_back(points), points.front(), points.back()) {}

    static TimeGrid uniform(double lo, double hi, std::size_t n) {
        require(n >= 2, "TimeGrid::uniform: need at least 2 points");
        std::vector<double> pts(n);
        const double step = (hi - lo) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) pts[i] = lo + step * static_cast<double>(i);
        pts.back() = hi;
        return TimeGrid(std::move(pts), lo, hi);
    }

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    double interval_min() const { return lo_; }
    double interval_max() const { return hi_; }

    /// Trapezoid-rule weights; strictly positive on any valid grid.
    std::vector<double> quadrature_weights() const {
        std::vector<double> w(points_.size(), 0.0);
        for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
            const double half = 0.5 * (points_[i + 1] - points_[i]);
            w[i] += half;
            w[i + 1] += half;
        }
        return w;
    }

    bool same_points(const TimeGrid& other, double tol = 0.0) const {
        if (points_.size() != other.points_.size()) return false;
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (std::abs(points_[i] - other.points_[i]) > tol) return false;
        return true;
    }

private:
    static std::vector<double> checked_front_back(std::vector<double>& pts) {
        require(pts.size() >= 2, "TimeGrid: need at least 2 points");
        return std::move(pts);
    }

    std::vector<double> points_;
    double lo_ = 0.0;
    double hi_ = 1.0;
};

} // namespace stfr
