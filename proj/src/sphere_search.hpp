#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qradius/matrix.hpp"

namespace qradius::detail {

// Objective on the unit sphere of C^n; always called with a unit vector.
using SphereObjective = std::function<double(std::span<const Complex>)>;

struct SphereSearchOptions {
    int restarts = 64;
    int max_iters = 500;
    double step_tol = 1e-12;
    std::uint64_t seed = 42;
    std::vector<Vector> extra_starts;
};

struct SphereSearchResult {
    double value = 0.0;
    Vector x;
};

/// Multi-start projected ascent with central-difference gradients and
/// Armijo backtracking. Deterministic for fixed options; the best start wins
/// (ties resolved by start order).
SphereSearchResult maximize_on_sphere(std::size_t n, const SphereObjective& objective,
                                      const SphereSearchOptions& options);

/// Top eigenvectors of Re(e^{i theta} T) at `count` equally spaced angles in [0, 2pi).
std::vector<Vector> rotated_hermitian_starts(const Matrix& t, int count);

}  // namespace qradius::detail
