#pragma once

#include <stdexcept>
#include <string>

namespace gprdpf {

// Distortion target outside the attainable range; carries the valid bounds.
class FeasibilityError : public std::runtime_error {
public:
    FeasibilityError(const std::string& what, double feasible_min, double feasible_max)
        : std::runtime_error(what), min_(feasible_min), max_(feasible_max) {}

    double feasible_min() const noexcept { return min_; }
    double feasible_max() const noexcept { return max_; }

private:
    double min_;
    double max_;
};

// Numerical breakdown: indefinite Gram matrix, failed bracket, inconsistent test channel.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unreadable input or unwritable output path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gprdpf
