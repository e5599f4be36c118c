#include "gprdpf/mercer.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>

#include "gprdpf/errors.hpp"

namespace gprdpf {

EigenSpectrum EigenSpectrum::from_eigenvalues(Eigen::VectorXd eigenvalues, double tail_trace) {
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        if (!(eigenvalues(i) >= 0.0)) {
            throw std::invalid_argument("EigenSpectrum: eigenvalues must be nonnegative");
        }
        if (i > 0 && eigenvalues(i) > eigenvalues(i - 1)) {
            throw std::invalid_argument("EigenSpectrum: eigenvalues must be non-increasing");
        }
    }
    const double floor = eigenvalues.size() > 0 ? -1e-10 * eigenvalues.sum() : 0.0;
    if (tail_trace < floor) {
        throw std::invalid_argument("EigenSpectrum: tail_trace must be nonnegative up to round-off");
    }
    EigenSpectrum s;
    s.eigenvalues = std::move(eigenvalues);
    s.tail_trace = tail_trace;
    return s;
}

EigenSpectrum decompose(const Kernel& kernel, int n_modes) {
    const Domain& dom = kernel.domain();
    if (n_modes < 1) throw std::invalid_argument("decompose: n_modes must be positive");
    if (n_modes > dom.grid_size) {
        throw std::invalid_argument("decompose: n_modes exceeds the quadrature grid size");
    }

    const Eigen::VectorXd nodes = dom.nodes();
    const Eigen::VectorXd w = dom.weights();
    const Eigen::VectorXd sqrt_w = w.array().sqrt();
    const Eigen::MatrixXd gram = kernel.gram(nodes);
    const double quad_trace = w.dot(gram.diagonal());

    // Symmetrized weighted operator W^{1/2} K W^{1/2}; same spectrum as the
    // quadrature-discretized integral operator.
    Eigen::MatrixXd a = sqrt_w.asDiagonal() * gram * sqrt_w.asDiagonal();
    a = 0.5 * (a + a.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("decompose: eigensolver failed to converge");
    }
    if (solver.eigenvalues()(0) < -kGramIndefiniteTol * std::max(quad_trace, 0.0)) {
        throw NumericalError("decompose: kernel Gram matrix is indefinite beyond tolerance");
    }

    const Eigen::Index ng = dom.grid_size;
    const Eigen::Index n = n_modes;
    EigenSpectrum spectrum;
    spectrum.grid = nodes;
    spectrum.weights = w;
    spectrum.eigenvalues.resize(n);
    spectrum.eigenfunctions.resize(ng, n);

    const double top = solver.eigenvalues()(ng - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index src = ng - 1 - i;  // Eigen sorts ascending
        double lambda = solver.eigenvalues()(src);
        if (lambda < kEigenvalueFloorRel * top) lambda = 0.0;
        spectrum.eigenvalues(i) = lambda;
        // Nystrom back-map: unit eigenvectors of the weighted operator become
        // eigenfunction samples orthonormal under the quadrature inner product.
        spectrum.eigenfunctions.col(i) = solver.eigenvectors().col(src).array() / sqrt_w.array();
    }
    spectrum.tail_trace = quad_trace - spectrum.eigenvalues.sum();
    return spectrum;
}

double trace(const EigenSpectrum& spectrum) {
    return spectrum.eigenvalues.sum() + spectrum.tail_trace;
}

EigenSpectrum truncate(const EigenSpectrum& spectrum, int n_modes) {
    if (n_modes < 0 || n_modes > spectrum.eigenvalues.size()) {
        throw std::invalid_argument("truncate: n_modes out of range");
    }
    EigenSpectrum out;
    out.grid = spectrum.grid;
    out.weights = spectrum.weights;
    out.eigenvalues = spectrum.eigenvalues.head(n_modes);
    if (spectrum.has_eigenfunctions()) {
        out.eigenfunctions = spectrum.eigenfunctions.leftCols(n_modes);
    }
    out.tail_trace = trace(spectrum) - out.eigenvalues.sum();
    return out;
}

int recommended_truncation(const EigenSpectrum& spectrum, double tail_fraction) {
    const double total = trace(spectrum);
    if (!(total > 0.0)) return 0;
    double retained = 0.0;
    for (Eigen::Index n = 0; n < spectrum.eigenvalues.size(); ++n) {
        retained += spectrum.eigenvalues(n);
        if (total - retained < tail_fraction * total) return static_cast<int>(n) + 1;
    }
    return static_cast<int>(spectrum.eigenvalues.size());
}

double reconstruction_residual(const EigenSpectrum& spectrum, const Kernel& kernel) {
    if (!spectrum.has_eigenfunctions()) {
        throw std::invalid_argument("reconstruction_residual: spectrum carries no eigenfunctions");
    }
    const Domain& dom = kernel.domain();
    if (spectrum.grid.size() != dom.grid_size ||
        std::abs(spectrum.grid(spectrum.grid.size() - 1) - dom.length) > 1e-12 * dom.length) {
        throw std::invalid_argument("reconstruction_residual: spectrum grid does not match the kernel domain");
    }
    const Eigen::MatrixXd gram = kernel.gram(spectrum.grid);
    const Eigen::MatrixXd rec =
        spectrum.eigenfunctions * spectrum.eigenvalues.asDiagonal() * spectrum.eigenfunctions.transpose();
    return (gram - rec).cwiseAbs().maxCoeff();
}

}  // namespace gprdpf
