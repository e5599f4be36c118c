#pragma once

#include <optional>

#include <Eigen/Core>

namespace gprdpf {

// Symmetric quadrature grid over [-f_max, f_max]; weights follow the composite
// trapezoid rule and sum to 2 * f_max.
struct FrequencyGrid {
    Eigen::VectorXd nodes;    // ascending, symmetric about 0
    Eigen::VectorXd weights;  // positive
    double f_max = 0.0;

    static FrequencyGrid uniform(double f_max, int n);
};

enum class SpectralFamily { Rectangular, LorentzianOU, GaussianShape, Tabulated };

// One-sided parameters for the integration window: densities are integrated over
// [-f_max, f_max] and the mass beyond the window is reported separately.
struct SpectrumWindow {
    double f_max;
    int grid_size = 4096;
};

// Power spectral density of a stationary process: nonnegative and even in f.
class SpectralDensity {
public:
    // Constant level s0 on |f| <= half_width, zero outside.
    static SpectralDensity rectangular(double level, double half_width, SpectrumWindow window);
    // 2 sigma^2 l / (1 + (2 pi f l)^2); the transform of sigma^2 exp(-|tau|/l).
    static SpectralDensity lorentzian_ou(double variance, double lengthscale, SpectrumWindow window);
    // Gaussian bump of total mass sigma^2 and standard width w.
    static SpectralDensity gaussian_shape(double variance, double width, SpectrumWindow window);
    // Linear interpolation of (frequency, value) samples given for f >= 0 starting
    // at 0; evaluates at |f| and returns 0 beyond the last tabulated frequency.
    static SpectralDensity tabulated(Eigen::VectorXd frequencies, Eigen::VectorXd values,
                                     int grid_size = 4096);

    double operator()(double f) const;

    SpectralFamily family() const noexcept { return family_; }
    double f_max() const noexcept { return window_.f_max; }
    int default_grid_size() const noexcept { return window_.grid_size; }
    double variance() const noexcept { return variance_; }
    double lengthscale() const noexcept { return lengthscale_; }
    double level() const noexcept { return level_; }
    double half_width() const noexcept { return half_width_; }
    double width() const noexcept { return width_; }

    FrequencyGrid default_grid() const { return FrequencyGrid::uniform(f_max(), default_grid_size()); }

private:
    SpectralDensity(SpectralFamily family, SpectrumWindow window);

    SpectralFamily family_;
    SpectrumWindow window_;
    double variance_ = 0.0;
    double lengthscale_ = 0.0;
    double level_ = 0.0;
    double half_width_ = 0.0;
    double width_ = 0.0;
    double lorentz_peak_ = 0.0;    // 2 sigma^2 l
    double lorentz_scale_ = 0.0;   // (2 pi l)^2
    double gauss_amp_ = 0.0;       // sigma^2 / (w sqrt(2 pi))
    double gauss_decay_ = 0.0;     // 1 / (2 w^2)
    Eigen::VectorXd table_freq_;
    Eigen::VectorXd table_values_;
};

// Trapezoid quadrature of S over the grid window.
double total_power(const SpectralDensity& density, const FrequencyGrid& grid);

// Closed-form integral over the whole line, when the family admits one.
std::optional<double> analytic_total_power(const SpectralDensity& density);

// Closed-form integral over [-f_limit, f_limit], when the family admits one.
std::optional<double> analytic_window_power(const SpectralDensity& density, double f_limit);

// Mass beyond [-f_max, f_max], invisible to any quadrature on the window.
// Reported as metadata next to quadrature results.
std::optional<double> truncated_tail_mass(const SpectralDensity& density);

}  // namespace gprdpf
