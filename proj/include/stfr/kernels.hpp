#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "stfr/common.hpp"

namespace stfr {

enum class KernelFamily { Gaussian, Exponential, DoublePower, Nearest };
enum class KernelFlavor { GW, SAR };

inline std::string to_string(KernelFamily f) {
    switch (f) {
        case KernelFamily::Gaussian: return "Gaussian";
        case KernelFamily::Exponential: return "Exponential";
        case KernelFamily::DoublePower: return "DoublePower";
        case KernelFamily::Nearest: return "Nearest";
    }
    return "?";
}

inline KernelFamily kernel_family_from_string(const std::string& s) {
    if (s == "Gaussian") return KernelFamily::Gaussian;
    if (s == "Exponential" || s == "Expo") return KernelFamily::Exponential;
    if (s == "DoublePower") return KernelFamily::DoublePower;
    if (s == "Nearest") return KernelFamily::Nearest;
    throw validation_error("unknown kernel family: " + s);
}

/// Kernel family plus bandwidth. The SAR flavor forces value 0 at w = 0
/// (a location never weights its own response); Nearest is defined for the
/// autoregressive setting only, with h counting neighbors.
struct KernelSpec {
    KernelFamily family = KernelFamily::Gaussian;
    double bandwidth = 1.0;
    KernelFlavor flavor = KernelFlavor::GW;

    void validate() const {
        require(bandwidth > 0.0, "kernel: bandwidth must be positive");
        if (family == KernelFamily::Nearest) {
            require(flavor == KernelFlavor::SAR, "kernel: Nearest is SAR-only");
            require(bandwidth == std::floor(bandwidth),
                    "kernel: Nearest bandwidth must be an integer neighbor count");
        }
    }
};

inline double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    require(a.size() == b.size(), "euclidean_distance: dimension mismatch");
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        acc += d * d;
    }
    return std::sqrt(acc);
}

/// Pointwise kernel weight at distance w (Nearest excluded; it needs the
/// whole distance vector, see nearest_weights).
inline double kernel_weight(const KernelSpec& spec, double w) {
    spec.validate();
    require(w >= 0.0, "kernel_weight: negative distance");
    require(spec.family != KernelFamily::Nearest,
            "kernel_weight: Nearest is evaluated per distance vector");
    if (spec.flavor == KernelFlavor::SAR && w == 0.0) return 0.0;
    const double h = spec.bandwidth;
    switch (spec.family) {
        case KernelFamily::Gaussian: {
            const double r = w / h;
            return std::exp(-0.5 * r * r);
        }
        case KernelFamily::Exponential:
            return std::exp(-0.5 * w / h);
        case KernelFamily::DoublePower: {
            if (w >= h) return 0.0;
            const double r = 1.0 - (w / h) * (w / h);
            return r * r;
        }
        default: return 0.0;
    }
}

/// Weights of all samples with respect to one regression point (GW flavor).
inline std::vector<double> gw_weight_vector(const std::vector<std::vector<double>>& locations,
                                            const std::vector<double>& target,
                                            const KernelSpec& spec) {
    require(spec.flavor == KernelFlavor::GW, "gw_weight_vector: GW flavor required");
    std::vector<double> weights(locations.size());
    for (std::size_t i = 0; i < locations.size(); ++i)
        weights[i] = kernel_weight(spec, euclidean_distance(locations[i], target));
    return weights;
}

/// 0/1 weights for the h smallest positive distances. The self distance slot
/// (exactly 0) always gets weight 0. Ties at the h-th order statistic break
/// by ascending index so exactly h entries are 1.
inline std::vector<double> nearest_weights(const std::vector<double>& distances, long h) {
    const long n = static_cast<long>(distances.size());
    require(h >= 1 && h <= n - 1, "nearest_weights: h out of [1, N-1]");
    std::vector<std::size_t> order(distances.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return distances[a] < distances[b];
    });
    std::vector<double> w(distances.size(), 0.0);
    long placed = 0;
    for (std::size_t idx : order) {
        if (distances[idx] <= 0.0) continue; // self (and coincident points at distance 0)
        if (placed == h) break;
        w[idx] = 1.0;
        ++placed;
    }
    return w;
}

/// Raw and row-normalized spatial-autoregression weight matrices.
struct SarWeights {
    Eigen::MatrixXd raw;        // zero diagonal, nonnegative
    Eigen::MatrixXd normalized; // rows sum to 1, or stay all-zero

    std::size_t size() const { return static_cast<std::size_t>(raw.rows()); }
};

inline Eigen::MatrixXd row_normalize(const Eigen::MatrixXd& raw) {
    Eigen::MatrixXd out = raw;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        const double s = out.row(i).sum();
        if (s > 0.0) out.row(i) /= s;
    }
    return out;
}

/// Pairwise SAR weight matrix over the training locations.
inline SarWeights sar_weight_matrix(const std::vector<std::vector<double>>& locations,
                                    const KernelSpec& spec) {
    spec.validate();
    require(spec.flavor == KernelFlavor::SAR, "sar_weight_matrix: SAR flavor required");
    const std::size_t n = locations.size();
    require(n >= 2, "sar_weight_matrix: need at least 2 locations");

    Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));
    if (spec.family == KernelFamily::Nearest) {
        const long h = std::min<long>(static_cast<long>(spec.bandwidth), static_cast<long>(n) - 1);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> dist(n);
            for (std::size_t j = 0; j < n; ++j)
                dist[j] = (i == j) ? 0.0 : euclidean_distance(locations[i], locations[j]);
            const std::vector<double> w = nearest_weights(dist, h);
            for (std::size_t j = 0; j < n; ++j)
                raw(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = w[j];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    raw(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                        kernel_weight(spec, euclidean_distance(locations[i], locations[j]));
    }
    return SarWeights{raw, row_normalize(raw)};
}

/// Out-of-sample augmentation: the (N+1)x(N+1) raw matrix gains the kernel
/// values of the training points with respect to the new location as its last
/// column/row, with 0 in the corner; rows are then re-normalized.
struct SarAugmentation {
    Eigen::MatrixXd normalized;     // (N+1)x(N+1)
    Eigen::VectorXd new_row_weights; // normalized weights of the new point over training samples
};

inline SarAugmentation augment_sar_matrix(const SarWeights& trained,
                                          const std::vector<double>& new_location,
                                          const std::vector<std::vector<double>>& locations,
                                          const KernelSpec& spec) {
    spec.validate();
    require(spec.flavor == KernelFlavor::SAR, "augment_sar_matrix: SAR flavor required");
    const std::size_t n = locations.size();
    require(trained.size() == n, "augment_sar_matrix: matrix/location count mismatch");

    Eigen::VectorXd oos(static_cast<Eigen::Index>(n));
    if (spec.family == KernelFamily::Nearest) {
        std::vector<double> dist(n + 1);
        for (std::size_t j = 0; j < n; ++j)
            dist[j] = euclidean_distance(locations[j], new_location);
        dist[n] = 0.0; // the new point itself
        const long h = std::min<long>(static_cast<long>(spec.bandwidth), static_cast<long>(n));
        const std::vector<double> w = nearest_weights(dist, h);
        for (std::size_t j = 0; j < n; ++j) oos(static_cast<Eigen::Index>(j)) = w[j];
    } else {
        for (std::size_t j = 0; j < n; ++j)
            oos(static_cast<Eigen::Index>(j)) =
                kernel_weight(spec, euclidean_distance(locations[j], new_location));
    }

    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(m + 1, m + 1);
    raw.topLeftCorner(m, m) = trained.raw;
    raw.topRightCorner(m, 1) = oos;
    raw.bottomLeftCorner(1, m) = oos.transpose();
    raw(m, m) = 0.0;

    SarAugmentation out;
    out.normalized = row_normalize(raw);
    out.new_row_weights = out.normalized.row(m).head(m);
    return out;
}

/// Rook-contiguity 0/1 adjacency for a P x Q cell grid, cells numbered
/// row-major. Cells sharing an edge are neighbors.
inline Eigen::MatrixXd rook_matrix(long p_rows, long q_cols) {
    require(p_rows >= 1 && q_cols >= 1, "rook_matrix: P,Q >= 1 required");
    const long n = p_rows * q_cols;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    auto cell = [q_cols](long p, long q) { return p * q_cols + q; };
    for (long p = 0; p < p_rows; ++p)
        for (long q = 0; q < q_cols; ++q) {
            if (p + 1 < p_rows) {
                m(cell(p, q), cell(p + 1, q)) = 1.0;
                m(cell(p + 1, q), cell(p, q)) = 1.0;
            }
            if (q + 1 < q_cols) {
                m(cell(p, q), cell(p, q + 1)) = 1.0;
                m(cell(p, q + 1), cell(p, q)) = 1.0;
            }
        }
    return m;
}

} // namespace stfr
