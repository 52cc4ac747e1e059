#pragma once

#include <cstdint>

#include "qradius/matrix.hpp"

namespace qradius {

/// Angle-sweep settings for the support-function based functionals.
struct SweepConfig {
    int angle_count = 720;
    int refine_iters = 40;
    double tol = 1e-10;

    void validate() const;
};

struct TranscendentalRadius {
    double m = 0.0;
    Complex mu{};  // Stampfli center, the minimizer of ||T - mu I||
};

struct Functionals {
    double omega = 0.0;
    double crawford = 0.0;
    double m_radius = 0.0;
    Complex mu_center{};
};

/// w(T) = max_theta lambda_max(Re(e^{i theta} T)).
double numerical_radius(const Matrix& t, const SweepConfig& cfg = {});

/// c(T), the distance from 0 to W(T): max(0, max_theta lambda_min(Re(e^{i theta} T))).
double crawford_number(const Matrix& t, const SweepConfig& cfg = {});

/// m(T) = min over complex lambda of ||T - lambda I||.
///
/// The objective is convex in lambda, so nested golden-section searches over
/// Re and Im (inner search fully resolved for each outer probe) converge to the
/// global minimum. The search box is |Re|, |Im| <= ||T||, which contains the
/// closure of W(T) and therefore the minimizer.
TranscendentalRadius transcendental_radius(const Matrix& t, const SweepConfig& cfg = {});

/// sqrt(sup_{|x|=1} ||Tx||^2 - |<Tx,x>|^2), estimated by multi-start ascent.
/// Never exceeds the true m(T) beyond roundoff.
double prasanna_sup(const Matrix& t, int restarts = 64, std::uint64_t seed = 42);

Functionals compute_functionals(const Matrix& t, const SweepConfig& cfg = {});

}  // namespace qradius
