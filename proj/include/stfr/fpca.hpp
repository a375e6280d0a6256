#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "stfr/dataset.hpp"
#include "stfr/quadrature.hpp"

namespace stfr {

/// K basis functions on a common grid, with the quadrature weights under
/// which they are (optionally) orthonormal. For an FPCA source the
/// eigenvalues of the covariance operator are kept alongside.
struct BasisSystem {
    TimeGrid grid;
    std::vector<std::vector<double>> functions; // K rows, each grid.size() long
    std::vector<double> eigenvalues;            // per retained function; empty for non-FPCA bases
    std::vector<double> quad_weights;
    bool orthonormal = false;

    std::size_t count() const { return functions.size(); }

    void validate() const {
        require(!functions.empty(), "basis: K >= 1 required");
        require(quad_weights.size() == grid.size(), "basis: weight/grid length mismatch");
        for (const auto& f : functions)
            require(f.size() == grid.size(), "basis: function/grid length mismatch");
        if (!eigenvalues.empty())
            require(eigenvalues.size() == functions.size(), "basis: eigenvalue count mismatch");
    }
};

struct FpcaResult {
    std::vector<double> mean_curve;
    BasisSystem basis;          // the K_sel retained eigenfunctions
    std::size_t k_selected = 0;
    std::vector<double> all_eigenvalues; // full nonincreasing spectrum (clipped at 0)
    double fve_achieved = 0.0;           // cumulative fraction at k_selected
};

/// Functional principal component analysis of one feature across the dataset.
///
/// All samples must share a grid for the feature (ingestion resamples).
/// Eigenfunctions come from the quadrature-weighted discretized covariance:
/// with D = diag(sqrt(w)) the symmetric problem D C D v = lambda v is solved
/// and f = D^-1 v, which makes the returned functions L2-orthonormal under
/// the trapezoid weights. Sign convention: each eigenfunction is flipped so
/// its integral is nonnegative, falling back to the first nonzero value when
/// the integral vanishes. K_sel is the smallest K whose cumulative eigenvalue
/// fraction reaches fve_cutoff.
inline FpcaResult fpca(const SpatialDataset& dataset, std::size_t feature_index,
                       double fve_cutoff) {
    require(fve_cutoff > 0.0 && fve_cutoff <= 1.0, "fpca: fve_cutoff must be in (0,1]");
    require(dataset.size() >= 2, "fpca: need at least 2 samples");
    require(feature_index < dataset.feature_count(), "fpca: feature index out of range");

    const TimeGrid& grid = dataset.samples.front().features[feature_index].grid;
    const std::size_t m = grid.size();
    const std::size_t n = dataset.size();
    for (const auto& s : dataset.samples)
        require(s.features[feature_index].grid.same_points(grid),
                "fpca: samples must share a common grid for the feature");

    Eigen::MatrixXd curves(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            curves(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                dataset.samples[i].features[feature_index].values[j];

    const Eigen::RowVectorXd mean = curves.colwise().mean();
    curves.rowwise() -= mean;

    // Discretized sample covariance, weighted into a symmetric eigenproblem.
    const std::vector<double> w = grid.quadrature_weights();
    Eigen::VectorXd sqrt_w(static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j) sqrt_w(static_cast<Eigen::Index>(j)) = std::sqrt(w[j]);

    Eigen::MatrixXd cov = (curves.transpose() * curves) / static_cast<double>(n - 1);
    cov = 0.5 * (cov + cov.transpose());
    Eigen::MatrixXd sym = sqrt_w.asDiagonal() * cov * sqrt_w.asDiagonal();
    sym = 0.5 * (sym + sym.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw numerical_error("fpca: eigendecomposition failed");

    // Ascending from Eigen; reorder to nonincreasing and clip round-off negatives.
    std::vector<double> lambda(m);
    Eigen::MatrixXd vecs(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t k = 0; k < m; ++k) {
        const auto src = static_cast<Eigen::Index>(m - 1 - k);
        lambda[k] = std::max(0.0, solver.eigenvalues()(src));
        vecs.col(static_cast<Eigen::Index>(k)) = solver.eigenvectors().col(src);
    }

    double total = 0.0;
    for (double v : lambda) total += v;
    if (!(total > 0.0) || !std::isfinite(total))
        throw numerical_error("fpca: zero total variance (all curves identical)");

    std::size_t k_sel = lambda.size();
    double cum = 0.0;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        cum += lambda[k];
        if (cum / total >= fve_cutoff) {
            k_sel = k + 1;
            break;
        }
    }

    FpcaResult out;
    out.mean_curve.assign(mean.data(), mean.data() + m);
    out.k_selected = k_sel;
    out.all_eigenvalues = lambda;
    double cum_sel = 0.0;
    for (std::size_t k = 0; k < k_sel; ++k) cum_sel += lambda[k];
    out.fve_achieved = cum_sel / total;

    out.basis.grid = grid;
    out.basis.quad_weights = w;
    out.basis.orthonormal = true;
    out.basis.eigenvalues.assign(lambda.begin(), lambda.begin() + static_cast<long>(k_sel));
    out.basis.functions.resize(k_sel);
    for (std::size_t k = 0; k < k_sel; ++k) {
        std::vector<double> f(m);
        for (std::size_t j = 0; j < m; ++j)
            f[j] = vecs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) /
                   sqrt_w(static_cast<Eigen::Index>(j));
        // Deterministic sign: nonnegative integral, else first nonzero value.
        double integral = trapezoid_integrate(f, grid);
        double pivot = integral;
        if (std::abs(pivot) < 1e-10) {
            pivot = 0.0;
            for (double v : f)
                if (std::abs(v) > 1e-10) {
                    pivot = v;
                    break;
                }
        }
        if (pivot < 0.0)
            for (double& v : f) v = -v;
        out.basis.functions[k] = std::move(f);
    }
    return out;
}

/// Scores of a (raw) curve against the basis: k-th entry is the quadrature
/// inner product of the mean-centered curve with the k-th basis function.
inline std::vector<double> project_scores(const FunctionalCurve& curve,
                                          const std::vector<double>& mean_curve,
                                          const BasisSystem& basis) {
    require(curve.grid.same_points(basis.grid), "project_scores: grid mismatch");
    require(mean_curve.size() == curve.values.size(), "project_scores: mean length mismatch");
    std::vector<double> centered(curve.values.size());
    for (std::size_t j = 0; j < centered.size(); ++j)
        centered[j] = curve.values[j] - mean_curve[j];
    std::vector<double> scores(basis.count());
    for (std::size_t k = 0; k < basis.count(); ++k)
        scores[k] = inner_product(centered, basis.functions[k], basis.grid);
    return scores;
}

/// Parameter function W(beta, t) = sum_k beta_k psi_k(t) on the basis grid.
inline std::vector<double> evaluate_param_function(const std::vector<double>& beta,
                                                   const BasisSystem& basis) {
    require(beta.size() == basis.count(), "evaluate_param_function: beta length != K");
    std::vector<double> curve(basis.grid.size(), 0.0);
    for (std::size_t k = 0; k < beta.size(); ++k)
        for (std::size_t j = 0; j < curve.size(); ++j)
            curve[j] += beta[k] * basis.functions[k][j];
    return curve;
}

} // namespace stfr
