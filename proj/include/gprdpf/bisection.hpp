#pragma once

#include <cmath>
#include <algorithm>

#include "gprdpf/errors.hpp"

namespace gprdpf {

struct BisectOptions {
    double interval_rel_tol = 1e-12;  // stop when the bracket width shrinks below this, relative
    double target_rel_tol = 0.0;      // optional early stop on |f(mid) - target|, relative to |target|
    int max_iter = 200;
};

// Solves f(x) = target on [lo, hi] for non-decreasing f. Requires f(lo) <= target <= f(hi).
template <class F>
double bisect_increasing(F&& f, double target, double lo, double hi, BisectOptions opt = {}) {
    if (!(lo <= hi)) throw NumericalError("bisect_increasing: empty interval");
    if (f(lo) > target || f(hi) < target) {
        throw NumericalError("bisect_increasing: interval does not bracket the target");
    }
    for (int i = 0; i < opt.max_iter; ++i) {
        if ((hi - lo) <= opt.interval_rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval exhausted in floating point
        const double fm = f(mid);
        if (opt.target_rel_tol > 0.0 && std::abs(fm - target) <= opt.target_rel_tol * std::abs(target)) {
            return mid;
        }
        if (fm < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Grows hi geometrically until f(hi) >= target. Returns false if the growth cap is hit first.
template <class F>
bool grow_upper_bracket(F&& f, double target, double& hi, double growth = 2.0, int max_steps = 64) {
    for (int i = 0; i < max_steps; ++i) {
        if (f(hi) >= target) return true;
        hi *= growth;
    }
    return f(hi) >= target;
}

}  // namespace gprdpf
