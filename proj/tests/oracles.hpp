#pragma once

// Test-side reference computations. None of these call into the library's
// eigen, sweep, optimizer or canonical-form code paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qradius/matrix.hpp"

namespace oracle {

using qradius::Complex;
using qradius::Matrix;

inline constexpr double kPi = std::numbers::pi;

struct Mat2 {
    Complex a, b, c, d;
};

inline Mat2 m2(const Matrix& t) { return {t(0, 0), t(0, 1), t(1, 0), t(1, 1)}; }

// Largest singular value of a 2x2 matrix from the characteristic polynomial of T*T.
inline double opnorm2(const Mat2& m) {
    const double f = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
    const double det = std::abs(m.a * m.d - m.b * m.c);
    const double disc = std::max(0.0, f * f - 4.0 * det * det);
    return std::sqrt(0.5 * (f + std::sqrt(disc)));
}

inline double opnorm2(const Matrix& t) { return opnorm2(m2(t)); }

// Eigenvalues of a 2x2 Hermitian matrix, descending.
inline std::pair<double, double> herm_eig2(const Mat2& m) {
    const double mid = 0.5 * (m.a.real() + m.d.real());
    const double half = 0.5 * (m.a.real() - m.d.real());
    const double r = std::hypot(half, std::abs(m.b));
    return {mid + r, mid - r};
}

// Eigenvalues of a general 2x2 matrix.
inline std::pair<Complex, Complex> eig2(const Mat2& m) {
    const Complex tr = m.a + m.d;
    const Complex det = m.a * m.d - m.b * m.c;
    const Complex root = std::sqrt(tr * tr - 4.0 * det);
    return {0.5 * (tr + root), 0.5 * (tr - root)};
}

// Refines max of a smooth periodic function sampled on n points by a
// parabolic step around the best sample.
template <class F>
double periodic_max(F&& f, int n) {
    double best = -1e300;
    int arg = 0;
    for (int k = 0; k < n; ++k) {
        const double v = f(2.0 * kPi * k / n);
        if (v > best) best = v, arg = k;
    }
    // ternary search on the bracketing cell pair
    double lo = 2.0 * kPi * (arg - 1) / n, hi = 2.0 * kPi * (arg + 1) / n;
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2v = hi - (hi - lo) / 3.0;
        if (f(m1) < f(m2v)) lo = m1;
        else hi = m2v;
    }
    return std::max(best, f(0.5 * (lo + hi)));
}

// Numerical radius of a 2x2 matrix via the elliptical range theorem: W(T) is
// the ellipse with foci at the eigenvalues and minor axis
// sqrt(||T||_F^2 - |l1|^2 - |l2|^2).
inline double numerical_radius2(const Matrix& t) {
    const auto m = m2(t);
    const auto [l1, l2] = eig2(m);
    const double f = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
    const double minor = std::sqrt(std::max(0.0, f - std::norm(l1) - std::norm(l2)));
    const double major = std::hypot(minor, std::abs(l1 - l2));
    const Complex center = 0.5 * (l1 + l2);
    const Complex dir = std::abs(l1 - l2) > 0 ? (l1 - l2) / std::abs(l1 - l2) : Complex{1.0};
    return periodic_max(
        [&](double s) {
            return std::abs(center + dir * Complex{0.5 * major * std::cos(s), 0.5 * minor * std::sin(s)});
        },
        4096);
}

inline Complex apply_inner(const Mat2& m, Complex x1, Complex x2, Complex y1, Complex y2) {
    const Complex t1 = m.a * x1 + m.b * x2;
    const Complex t2 = m.c * x1 + m.d * x2;
    return t1 * std::conj(y1) + t2 * std::conj(y2);
}

// Brute-force w_q of a 2x2 matrix straight from the definition: x on a Bloch
// grid, y = q x + p e^{i psi} x_perp on a psi grid. Returns a lower bound that
// converges to w_q as the grids refine.
inline double wq_brute2(const Matrix& t, double q, int grid = 96) {
    const auto m = m2(t);
    const double p = std::sqrt(1.0 - q * q);
    double best = 0.0;
    for (int i = 0; i <= grid; ++i) {
        const double th = kPi * i / grid;
        for (int j = 0; j < 2 * grid; ++j) {
            const double ph = kPi * j / grid;
            const Complex x1 = std::cos(th / 2), x2 = std::polar(std::sin(th / 2), ph);
            const Complex z1 = -std::conj(x2), z2 = std::conj(x1);
            for (int k = 0; k < 2 * grid; ++k) {
                const Complex e = std::polar(1.0, kPi * k / grid);
                const Complex y1 = q * x1 + p * e * z1, y2 = q * x2 + p * e * z2;
                best = std::max(best, std::abs(apply_inner(m, x1, x2, y1, y2)));
            }
        }
    }
    return best;
}

// sqrt(sup ||Tx||^2 - |<Tx,x>|^2) over a Bloch grid (2x2 only).
inline double prasanna_grid2(const Matrix& t, int grid = 400) {
    const auto m = m2(t);
    double best = 0.0;
    for (int i = 0; i <= grid; ++i) {
        const double th = kPi * i / grid;
        for (int j = 0; j < 2 * grid; ++j) {
            const Complex x1 = std::cos(th / 2), x2 = std::polar(std::sin(th / 2), kPi * j / grid);
            const Complex t1 = m.a * x1 + m.b * x2, t2 = m.c * x1 + m.d * x2;
            const Complex s = t1 * std::conj(x1) + t2 * std::conj(x2);
            best = std::max(best, std::norm(t1) + std::norm(t2) - std::norm(s));
        }
    }
    return std::sqrt(best);
}

// min over a square lambda grid of ||T - lambda I|| (2x2 only).
struct GridMin {
    double value;
    Complex arg;
};

inline GridMin m_grid2(const Matrix& t, double half_width, int steps) {
    auto m = m2(t);
    GridMin out{1e300, {}};
    for (int i = -steps; i <= steps; ++i) {
        for (int j = -steps; j <= steps; ++j) {
            const Complex lam{half_width * i / steps, half_width * j / steps};
            const double v = opnorm2({m.a - lam, m.b, m.c, m.d - lam});
            if (v < out.value) out = {v, lam};
        }
    }
    return out;
}

}  // namespace oracle
