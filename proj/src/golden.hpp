#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace qradius::detail {

struct LineOptimum {
    double arg;
    double value;
};

// Golden-section search for a minimum of a unimodal f on [lo, hi]. Stops after
// `max_iters` shrinks or once the bracket is narrower than `tol`.
template <class F>
LineOptimum golden_minimize(F&& f, double lo, double hi, int max_iters, double tol) {
    constexpr double kInvPhi = std::numbers::phi - 1.0;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < max_iters && hi - lo > tol; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? LineOptimum{x1, f1} : LineOptimum{x2, f2};
}

template <class F>
LineOptimum golden_maximize(F&& f, double lo, double hi, int max_iters, double tol) {
    auto r = golden_minimize([&](double x) { return -f(x); }, lo, hi, max_iters, tol);
    return {r.arg, -r.value};
}

// Maximizes a 2pi-periodic function: scan `grid_points` equally spaced angles,
// then golden-refine the best `peaks` grid-local maxima over their neighbour bracket.
template <class F>
LineOptimum periodic_maximize(F&& f, int grid_points, int refine_iters, double tol, int peaks = 4) {
    const double step = 2.0 * std::numbers::pi / grid_points;
    std::vector<double> grid(grid_points);
    for (int k = 0; k < grid_points; ++k) grid[k] = f(k * step);

    std::vector<int> local;
    for (int k = 0; k < grid_points; ++k) {
        const double left = grid[(k + grid_points - 1) % grid_points];
        const double right = grid[(k + 1) % grid_points];
        if (grid[k] >= left && grid[k] >= right) local.push_back(k);
    }
    std::stable_sort(local.begin(), local.end(), [&](int a, int b) { return grid[a] > grid[b]; });
    if (static_cast<int>(local.size()) > peaks) local.resize(peaks);

    const auto top = std::max_element(grid.begin(), grid.end());
    LineOptimum best{(top - grid.begin()) * step, *top};
    for (int k : local) {
        const auto r = golden_maximize(f, (k - 1) * step, (k + 1) * step, refine_iters, tol);
        if (r.value > best.value) best = r;
    }
    return best;
}

}  // namespace qradius::detail
