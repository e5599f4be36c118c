#include "gprdpf/spectral_density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "gprdpf/compensated_sum.hpp"

namespace gprdpf {

FrequencyGrid FrequencyGrid::uniform(double f_max, int n) {
    if (!(f_max > 0.0)) throw std::invalid_argument("FrequencyGrid: f_max must be positive");
    if (n < 2) throw std::invalid_argument("FrequencyGrid: need at least 2 nodes");
    FrequencyGrid g;
    g.f_max = f_max;
    g.nodes = Eigen::VectorXd::LinSpaced(n, -f_max, f_max);
    const double h = 2.0 * f_max / static_cast<double>(n - 1);
    g.weights = Eigen::VectorXd::Constant(n, h);
    g.weights(0) = 0.5 * h;
    g.weights(n - 1) = 0.5 * h;
    return g;
}

SpectralDensity::SpectralDensity(SpectralFamily family, SpectrumWindow window)
    : family_(family), window_(window) {
    if (!(window_.f_max > 0.0)) throw std::invalid_argument("SpectralDensity: f_max must be positive");
    if (window_.grid_size < 2) throw std::invalid_argument("SpectralDensity: grid_size must be at least 2");
}

SpectralDensity SpectralDensity::rectangular(double level, double half_width, SpectrumWindow window) {
    if (!(level > 0.0)) throw std::invalid_argument("rectangular: level must be positive");
    if (!(half_width > 0.0)) throw std::invalid_argument("rectangular: half_width must be positive");
    SpectralDensity s(SpectralFamily::Rectangular, window);
    s.level_ = level;
    s.half_width_ = half_width;
    return s;
}

SpectralDensity SpectralDensity::lorentzian_ou(double variance, double lengthscale, SpectrumWindow window) {
    if (!(variance > 0.0)) throw std::invalid_argument("lorentzian_ou: variance must be positive");
    if (!(lengthscale > 0.0)) throw std::invalid_argument("lorentzian_ou: lengthscale must be positive");
    SpectralDensity s(SpectralFamily::LorentzianOU, window);
    s.variance_ = variance;
    s.lengthscale_ = lengthscale;
    s.lorentz_peak_ = 2.0 * variance * lengthscale;
    const double c = 2.0 * std::numbers::pi * lengthscale;
    s.lorentz_scale_ = c * c;
    return s;
}

SpectralDensity SpectralDensity::gaussian_shape(double variance, double width, SpectrumWindow window) {
    if (!(variance > 0.0)) throw std::invalid_argument("gaussian_shape: variance must be positive");
    if (!(width > 0.0)) throw std::invalid_argument("gaussian_shape: width must be positive");
    SpectralDensity s(SpectralFamily::GaussianShape, window);
    s.variance_ = variance;
    s.width_ = width;
    s.gauss_amp_ = variance / (width * std::sqrt(2.0 * std::numbers::pi));
    s.gauss_decay_ = 1.0 / (2.0 * width * width);
    return s;
}

SpectralDensity SpectralDensity::tabulated(Eigen::VectorXd frequencies, Eigen::VectorXd values,
                                           int grid_size) {
    const Eigen::Index n = frequencies.size();
    if (n < 2) throw std::invalid_argument("tabulated density: need at least 2 samples");
    if (values.size() != n) throw std::invalid_argument("tabulated density: frequency/value size mismatch");
    if (frequencies(0) != 0.0) {
        throw std::invalid_argument("tabulated density: one-sided table must start at f = 0");
    }
    for (Eigen::Index i = 1; i < n; ++i) {
        if (!(frequencies(i) > frequencies(i - 1))) {
            throw std::invalid_argument("tabulated density: frequencies must be strictly ascending");
        }
    }
    if ((values.array() < 0.0).any()) {
        throw std::invalid_argument("tabulated density: values must be nonnegative");
    }
    SpectralDensity s(SpectralFamily::Tabulated, SpectrumWindow{frequencies(n - 1), grid_size});
    s.table_freq_ = std::move(frequencies);
    s.table_values_ = std::move(values);
    return s;
}

double SpectralDensity::operator()(double f) const {
    const double a = std::abs(f);  // even symmetry by construction
    switch (family_) {
        case SpectralFamily::Rectangular:
            return a <= half_width_ ? level_ : 0.0;
        case SpectralFamily::LorentzianOU:
            return lorentz_peak_ / (1.0 + lorentz_scale_ * f * f);
        case SpectralFamily::GaussianShape:
            return gauss_amp_ * std::exp(-gauss_decay_ * f * f);
        case SpectralFamily::Tabulated: {
            if (a > table_freq_(table_freq_.size() - 1)) return 0.0;
            Eigen::Index lo = 0;
            Eigen::Index hi = table_freq_.size() - 1;
            while (hi - lo > 1) {
                const Eigen::Index mid = (lo + hi) / 2;
                if (table_freq_(mid) <= a) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            const double h = table_freq_(lo + 1) - table_freq_(lo);
            const double t = h > 0.0 ? (a - table_freq_(lo)) / h : 0.0;
            return (1.0 - t) * table_values_(lo) + t * table_values_(lo + 1);
        }
    }
    return 0.0;
}

double total_power(const SpectralDensity& density, const FrequencyGrid& grid) {
    if (grid.nodes.size() == 0) throw std::invalid_argument("total_power: empty grid");
    CompensatedSum sum;
    for (Eigen::Index i = 0; i < grid.nodes.size(); ++i) {
        sum += grid.weights(i) * density(grid.nodes(i));
    }
    return sum.value();
}

std::optional<double> analytic_total_power(const SpectralDensity& density) {
    switch (density.family()) {
        case SpectralFamily::Rectangular:
            return 2.0 * density.half_width() * density.level();
        case SpectralFamily::LorentzianOU:
        case SpectralFamily::GaussianShape:
            return density.variance();
        case SpectralFamily::Tabulated:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<double> analytic_window_power(const SpectralDensity& density, double f_limit) {
    if (!(f_limit >= 0.0)) throw std::invalid_argument("analytic_window_power: f_limit must be nonnegative");
    switch (density.family()) {
        case SpectralFamily::Rectangular:
            return 2.0 * std::min(f_limit, density.half_width()) * density.level();
        case SpectralFamily::LorentzianOU: {
            const double c = 2.0 * std::numbers::pi * density.lengthscale();
            return density.variance() * (2.0 / std::numbers::pi) * std::atan(c * f_limit);
        }
        case SpectralFamily::GaussianShape:
            return density.variance() * std::erf(f_limit / (std::numbers::sqrt2 * density.width()));
        case SpectralFamily::Tabulated:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<double> truncated_tail_mass(const SpectralDensity& density) {
    const auto full = analytic_total_power(density);
    const auto windowed = analytic_window_power(density, density.f_max());
    if (!full || !windowed) return std::nullopt;
    return std::max(*full - *windowed, 0.0);
}

}  // namespace gprdpf
