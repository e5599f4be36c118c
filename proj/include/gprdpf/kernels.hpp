#pragma once

#include <Eigen/Core>

namespace gprdpf {

// Index interval [0, T] with a uniform quadrature grid of N_g nodes.
struct Domain {
    Domain(double length, int grid_size);

    double length;   // T
    int grid_size;   // N_g

    Eigen::VectorXd nodes() const;
    Eigen::VectorXd weights() const;  // composite trapezoid rule
};

enum class KernelFamily { SquaredExponential, ExponentialOU, Brownian, Tabulated };

// Covariance function of a zero-mean process on [0, T]. The parametric families
// are positive semidefinite by construction; tabulated values are symmetrized and
// bilinearly interpolated between grid nodes.
class Kernel {
public:
    static Kernel squared_exponential(double variance, double lengthscale, Domain domain);
    static Kernel exponential_ou(double variance, double lengthscale, Domain domain);
    static Kernel brownian(double scale, Domain domain);
    static Kernel tabulated(Eigen::VectorXd grid, Eigen::MatrixXd values, Domain domain);

    // k(s, t), symmetric in its arguments. Throws std::domain_error outside [0, T].
    double operator()(double s, double t) const;

    // Gram matrix on an arbitrary node set inside [0, T]; exactly symmetric.
    Eigen::MatrixXd gram(const Eigen::VectorXd& nodes) const;

    KernelFamily family() const noexcept { return family_; }
    const Domain& domain() const noexcept { return domain_; }
    double variance() const noexcept { return variance_; }
    double lengthscale() const noexcept { return lengthscale_; }

private:
    Kernel(KernelFamily family, Domain domain);

    double eval_unchecked(double s, double t) const;

    KernelFamily family_;
    Domain domain_;
    double variance_ = 0.0;     // sigma^2; the scale parameter for the Brownian family
    double lengthscale_ = 0.0;  // unused for Brownian and tabulated kernels
    Eigen::VectorXd table_grid_;
    Eigen::MatrixXd table_values_;
};

}  // namespace gprdpf
