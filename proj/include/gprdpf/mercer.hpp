#pragma once

#include <Eigen/Core>

#include "gprdpf/kernels.hpp"

namespace gprdpf {

// Quadrature discretization constants for the kernel eigenproblem. The rule is the
// composite trapezoid on the domain's uniform grid; swap the Domain weights to change it.
inline constexpr double kEigenvalueFloorRel = 1e-12;   // below this (relative to the top eigenvalue) values clamp to 0
inline constexpr double kGramIndefiniteTol = 1e-10;    // tolerated negative eigenvalue mass, relative to the trace

// Truncated eigendecomposition of a covariance operator: eigenvalues in
// descending order, Nystrom eigenfunction samples on the quadrature grid, and the
// trace mass beyond the truncation.
struct EigenSpectrum {
    Eigen::VectorXd eigenvalues;      // descending, floor-clamped at 0
    Eigen::MatrixXd eigenfunctions;   // grid_size x n; column i samples phi_i; empty when not available
    Eigen::VectorXd grid;             // quadrature nodes
    Eigen::VectorXd weights;          // quadrature weights
    double tail_trace = 0.0;          // trace(K) - sum of retained eigenvalues

    bool has_eigenfunctions() const noexcept { return eigenfunctions.size() > 0; }

    // Spectrum given directly as a variance sequence (no grid attached).
    static EigenSpectrum from_eigenvalues(Eigen::VectorXd eigenvalues, double tail_trace = 0.0);
};

// Top-n eigenpairs of the weighted kernel operator on the domain grid.
// Throws std::invalid_argument when n_modes exceeds the grid size and
// NumericalError when the Gram matrix is indefinite beyond tolerance.
EigenSpectrum decompose(const Kernel& kernel, int n_modes);

// Retained eigenvalue mass plus the tail.
double trace(const EigenSpectrum& spectrum);

// Keeps the leading n_modes eigenvalues and folds the remainder into the tail.
EigenSpectrum truncate(const EigenSpectrum& spectrum, int n_modes);

// Smallest truncation order whose tail stays below tail_fraction of the trace.
int recommended_truncation(const EigenSpectrum& spectrum, double tail_fraction = 1e-3);

// Max-norm error of the truncated expansion against the kernel on the grid.
double reconstruction_residual(const EigenSpectrum& spectrum, const Kernel& kernel);

}  // namespace gprdpf
