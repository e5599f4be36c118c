#include "gprdpf/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gprdpf {

namespace {

// Locates x in an ascending grid; returns the left index and the interpolation fraction.
std::pair<Eigen::Index, double> locate(const Eigen::VectorXd& grid, double x) {
    const Eigen::Index n = grid.size();
    if (x <= grid(0)) return {0, 0.0};
    if (x >= grid(n - 1)) return {n - 2, 1.0};
    Eigen::Index lo = 0;
    Eigen::Index hi = n - 1;
    while (hi - lo > 1) {
        const Eigen::Index mid = (lo + hi) / 2;
        if (grid(mid) <= x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double h = grid(lo + 1) - grid(lo);
    return {lo, h > 0.0 ? (x - grid(lo)) / h : 0.0};
}

}  // namespace

Domain::Domain(double length_, int grid_size_) : length(length_), grid_size(grid_size_) {
    if (!(length > 0.0)) throw std::invalid_argument("Domain: length must be positive");
    if (grid_size < 2) throw std::invalid_argument("Domain: grid_size must be at least 2");
}

Eigen::VectorXd Domain::nodes() const {
    return Eigen::VectorXd::LinSpaced(grid_size, 0.0, length);
}

Eigen::VectorXd Domain::weights() const {
    const double h = length / static_cast<double>(grid_size - 1);
    Eigen::VectorXd w = Eigen::VectorXd::Constant(grid_size, h);
    w(0) = 0.5 * h;
    w(grid_size - 1) = 0.5 * h;
    return w;
}

Kernel::Kernel(KernelFamily family, Domain domain) : family_(family), domain_(domain) {}

Kernel Kernel::squared_exponential(double variance, double lengthscale, Domain domain) {
    if (!(variance > 0.0)) throw std::invalid_argument("squared_exponential: variance must be positive");
    if (!(lengthscale > 0.0)) throw std::invalid_argument("squared_exponential: lengthscale must be positive");
    Kernel k(KernelFamily::SquaredExponential, domain);
    k.variance_ = variance;
    k.lengthscale_ = lengthscale;
    return k;
}

Kernel Kernel::exponential_ou(double variance, double lengthscale, Domain domain) {
    if (!(variance > 0.0)) throw std::invalid_argument("exponential_ou: variance must be positive");
    if (!(lengthscale > 0.0)) throw std::invalid_argument("exponential_ou: lengthscale must be positive");
    Kernel k(KernelFamily::ExponentialOU, domain);
    k.variance_ = variance;
    k.lengthscale_ = lengthscale;
    return k;
}

Kernel Kernel::brownian(double scale, Domain domain) {
    if (!(scale > 0.0)) throw std::invalid_argument("brownian: scale must be positive");
    Kernel k(KernelFamily::Brownian, domain);
    k.variance_ = scale;
    return k;
}

Kernel Kernel::tabulated(Eigen::VectorXd grid, Eigen::MatrixXd values, Domain domain) {
    const Eigen::Index n = grid.size();
    if (n < 2) throw std::invalid_argument("tabulated kernel: grid needs at least 2 nodes");
    if (values.rows() != n || values.cols() != n) {
        throw std::invalid_argument("tabulated kernel: value matrix must be grid_size x grid_size");
    }
    for (Eigen::Index i = 1; i < n; ++i) {
        if (!(grid(i) > grid(i - 1))) {
            throw std::invalid_argument("tabulated kernel: grid must be strictly ascending");
        }
    }
    const double tol = 1e-12 * domain.length;
    if (std::abs(grid(0)) > tol || std::abs(grid(n - 1) - domain.length) > tol) {
        throw std::invalid_argument("tabulated kernel: grid must span [0, T]");
    }
    const double max_abs = values.cwiseAbs().maxCoeff();
    const double asym = (values - values.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(max_abs, 1.0)) {
        throw std::invalid_argument("tabulated kernel: value matrix must be symmetric");
    }
    Kernel k(KernelFamily::Tabulated, domain);
    k.table_grid_ = std::move(grid);
    // Exact symmetry so that interpolated evaluations commute in (s, t).
    k.table_values_ = 0.5 * (values + values.transpose());
    return k;
}

double Kernel::eval_unchecked(double s, double t) const {
    switch (family_) {
        case KernelFamily::SquaredExponential: {
            const double d = (s - t) / lengthscale_;
            return variance_ * std::exp(-0.5 * d * d);
        }
        case KernelFamily::ExponentialOU:
            return variance_ * std::exp(-std::abs(s - t) / lengthscale_);
        case KernelFamily::Brownian:
            return variance_ * std::min(s, t);
        case KernelFamily::Tabulated: {
            const auto [i, fs] = locate(table_grid_, s);
            const auto [j, ft] = locate(table_grid_, t);
            const double v00 = table_values_(i, j);
            const double v10 = table_values_(i + 1, j);
            const double v01 = table_values_(i, j + 1);
            const double v11 = table_values_(i + 1, j + 1);
            return (1.0 - fs) * ((1.0 - ft) * v00 + ft * v01) + fs * ((1.0 - ft) * v10 + ft * v11);
        }
    }
    return 0.0;
}

double Kernel::operator()(double s, double t) const {
    if (s < 0.0 || s > domain_.length || t < 0.0 || t > domain_.length) {
        throw std::domain_error("Kernel: arguments must lie in [0, T]");
    }
    return eval_unchecked(s, t);
}

Eigen::MatrixXd Kernel::gram(const Eigen::VectorXd& nodes) const {
    const Eigen::Index n = nodes.size();
    Eigen::MatrixXd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double v = (*this)(nodes(i), nodes(j));
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

}  // namespace gprdpf
