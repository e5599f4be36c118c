#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gprdpf {

// A scalar Gaussian source is compressed under an MSE budget and a squared
// Wasserstein-2 budget against its own law. Two regimes exist per dimension:
//   RD  - the perception budget is slack and classical reverse water-filling applies;
//   RDP - the budget binds and the water level adapts to the source variance.
enum class Branch { RD, RDP };

inline const char* to_string(Branch b) noexcept { return b == Branch::RD ? "RD" : "RDP"; }

namespace scalar_detail {

template <class S>
void require_source(S variance, S water_level, S perception) {
    if (!(variance > S(0))) throw std::invalid_argument("scalar_rdpf: variance must be positive");
    if (!(water_level > S(0))) throw std::invalid_argument("scalar_rdpf: water level must be positive");
    if (!(perception >= S(0))) throw std::invalid_argument("scalar_rdpf: perception must be nonnegative");
}

// Water-filling branch: D = min{water_level, variance}, R = max{(1/2) ln(variance/water_level), 0}.
template <class S>
S rd_distortion(S variance, S water_level) {
    return std::min(water_level, variance);
}

template <class S>
S rd_rate(S variance, S water_level) {
    return std::max(S(0.5) * std::log(variance / water_level), S(0));
}

// Perception-limited branch. With gap = sqrt(variance) - sqrt(perception) and
// root = sqrt(4 variance gap^2 + water_level^2):
//   D = perception + 2 sqrt(variance) gap + water_level - root
//   R = (1/2) ln( 2 variance gap^2 / (water_level (root - water_level)) )
// root - water_level is expanded as 4 variance gap^2 / (root + water_level), which
// removes the cancellation at large water levels and collapses the rate to
// (1/2) ln((root + water_level) / (2 water_level)).
template <class S>
S rdp_distortion(S variance, S water_level, S perception) {
    const S gap = std::sqrt(variance) - std::sqrt(perception);
    const S quad = S(4) * variance * gap * gap;
    const S root = std::sqrt(quad + water_level * water_level);
    return perception + S(2) * std::sqrt(variance) * gap - quad / (root + water_level);
}

template <class S>
S rdp_rate(S variance, S water_level, S perception) {
    const S gap = std::sqrt(variance) - std::sqrt(perception);
    const S root = std::sqrt(S(4) * variance * gap * gap + water_level * water_level);
    return S(0.5) * std::log((root + water_level) / (S(2) * water_level));
}

// Water level at which the branches meet, valid for perception <= variance.
template <class S>
S branch_switch_level(S variance, S perception) {
    const S gap = std::sqrt(variance) - std::sqrt(perception);
    return variance - gap * gap;
}

}  // namespace scalar_detail

// RD iff sqrt(perception) >= sqrt(variance) - sqrt(variance - min{variance, water_level}).
template <class S>
Branch branch_select(S variance, S water_level, S perception) {
    scalar_detail::require_source(variance, water_level, perception);
    const S residual = variance - std::min(variance, water_level);
    const S threshold = std::sqrt(variance) - std::sqrt(residual);
    return std::sqrt(perception) >= threshold ? Branch::RD : Branch::RDP;
}

template <class S>
S distortion_at(S variance, S water_level, S perception) {
    return branch_select(variance, water_level, perception) == Branch::RD
               ? scalar_detail::rd_distortion(variance, water_level)
               : scalar_detail::rdp_distortion(variance, water_level, perception);
}

// Rate in nats.
template <class S>
S rate_at(S variance, S water_level, S perception) {
    return branch_select(variance, water_level, perception) == Branch::RD
               ? scalar_detail::rd_rate(variance, water_level)
               : scalar_detail::rdp_rate(variance, water_level, perception);
}

// Variance of the reconstruction achieving the branch point. The RDP branch meets
// its perception budget with equality at the smaller root (sqrt(variance) - sqrt(perception))^2.
template <class S>
S reconstruction_variance(S variance, S water_level, S perception) {
    if (branch_select(variance, water_level, perception) == Branch::RD) {
        return variance - std::min(variance, water_level);
    }
    const S gap = std::sqrt(variance) - std::sqrt(perception);
    return gap * gap;
}

// Squared Wasserstein-2 distance between zero-mean scalar Gaussians.
template <class S>
S w2_scalar(S variance, S recon_variance) {
    if (!(variance >= S(0)) || !(recon_variance >= S(0))) {
        throw std::invalid_argument("w2_scalar: variances must be nonnegative");
    }
    const S d = std::sqrt(variance) - std::sqrt(recon_variance);
    return d * d;
}

// Distortion ceiling at zero rate: variance + (max{sqrt(variance) - sqrt(perception), 0})^2.
template <class S>
S zero_rate_distortion(S variance, S perception) {
    if (!(variance > S(0))) throw std::invalid_argument("zero_rate_distortion: variance must be positive");
    if (!(perception >= S(0))) throw std::invalid_argument("zero_rate_distortion: perception must be nonnegative");
    const S gap = std::max(std::sqrt(variance) - std::sqrt(perception), S(0));
    return variance + gap * gap;
}

// One fully resolved dimension.
struct ScalarAllocation {
    double variance = 0.0;        // source variance (KL eigenvalue)
    double perception = 0.0;      // per-dimension perception budget
    double water_level = 0.0;
    Branch branch = Branch::RD;
    double distortion = 0.0;
    double rate = 0.0;            // nats
    double recon_variance = 0.0;
};

ScalarAllocation allocate_scalar(double variance, double water_level, double perception);

// Water level reproducing the given distortion; distortion_at is non-decreasing
// in the level, so the inverse is found by bisection. Throws FeasibilityError
// outside (0, zero_rate_distortion].
double solve_water_level(double variance, double distortion, double perception);

// Scalar rate at a (distortion, perception) target, in nats.
double scalar_rate(double variance, double distortion, double perception);

}  // namespace gprdpf
