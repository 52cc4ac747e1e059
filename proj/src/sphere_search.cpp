#include "sphere_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace qradius::detail {

namespace {

constexpr double kFdStep = 1e-6;
constexpr double kArmijo = 1e-4;
constexpr double kKinkKick = 1e-9;
constexpr int kMaxKicks = 2;

// Real coordinates of C^n: (re_0, im_0, re_1, im_1, ...).
using Real = std::vector<double>;

void normalize(Vector& x) {
    const double nrm = norm2(x);
    for (auto& z : x) z /= nrm;
}

double real_dot(const Real& a, const Real& b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
}

Real to_real(const Vector& x) {
    Real r(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        r[2 * i] = x[i].real();
        r[2 * i + 1] = x[i].imag();
    }
    return r;
}

Vector step_along(const Vector& x, const Real& dir, double alpha) {
    Vector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = x[i] + alpha * Complex{dir[2 * i], dir[2 * i + 1]};
    normalize(y);
    return y;
}

class Ascent {
public:
    Ascent(std::size_t n, const SphereObjective& f, const SphereSearchOptions& opt, std::mt19937_64& rng)
        : n_(n), f_(f), opt_(opt), rng_(rng) {}

    SphereSearchResult run(Vector x) {
        normalize(x);
        double fx = f_(x);
        Real g = gradient(x);
        double alpha_guess = 0.1 / std::max(std::sqrt(real_dot(g, g)), 1e-300);
        int kicks = 0;
        int quiet = 0;

        for (int iter = 0; iter < opt_.max_iters; ++iter) {
            const double gg = real_dot(g, g);
            if (gg == 0.0 || !std::isfinite(gg)) break;
            const double gnorm = std::sqrt(gg);
            // Keep the trial step within about one radian on the sphere.
            double alpha = std::min(alpha_guess, 1.0 / gnorm);

            Vector trial;
            double ftrial = fx;
            bool accepted = false;
            while (alpha * gnorm > 1e-16) {
                trial = step_along(x, g, alpha);
                ftrial = f_(trial);
                if (ftrial >= fx + kArmijo * alpha * gg) {
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }

            if (!accepted) {
                // Stalled, usually at a kink of |<Tx,x>| or ||P Tx||.
                if (kicks++ >= kMaxKicks) break;
                Vector kicked = kick(x);
                const double fk = f_(kicked);
                if (fk >= fx) {
                    x = std::move(kicked);
                    fx = fk;
                }
                g = gradient(x);
                alpha_guess = 0.1 / std::max(std::sqrt(real_dot(g, g)), 1e-300);
                continue;
            }

            const double gain = ftrial - fx;
            Real g_new = gradient(trial);

            // Barzilai-Borwein guess for the next trial step.
            Real s = to_real(trial);
            const Real xr = to_real(x);
            Real y(g.size());
            for (std::size_t k = 0; k < s.size(); ++k) {
                s[k] -= xr[k];
                y[k] = g[k] - g_new[k];
            }
            const double sy = real_dot(s, y);
            alpha_guess = sy > 0.0 ? real_dot(s, s) / sy : 2.0 * alpha;

            x = std::move(trial);
            fx = ftrial;
            g = std::move(g_new);

            if (gain <= opt_.step_tol * std::max(1.0, std::abs(fx))) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
        }
        return {fx, std::move(x)};
    }

private:
    // Central differences of f(normalize(x + h e_k)), projected onto the tangent space at x.
    Real gradient(const Vector& x) const {
        Real g(2 * n_);
        Vector probe = x;
        for (std::size_t i = 0; i < n_; ++i) {
            for (int part = 0; part < 2; ++part) {
                const Complex dir = part == 0 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
                probe = x;
                probe[i] += kFdStep * dir;
                normalize(probe);
                const double up = f_(probe);
                probe = x;
                probe[i] -= kFdStep * dir;
                normalize(probe);
                const double down = f_(probe);
                g[2 * i + part] = (up - down) / (2.0 * kFdStep);
            }
        }
        const Real xr = to_real(x);
        const double radial = real_dot(g, xr);
        for (std::size_t k = 0; k < g.size(); ++k) g[k] -= radial * xr[k];
        return g;
    }

    Vector kick(const Vector& x) {
        std::normal_distribution<double> normal(0.0, 1.0);
        Vector d(n_);
        for (auto& z : d) z = {normal(rng_), normal(rng_)};
        const Complex along = inner(d, x);
        for (std::size_t i = 0; i < n_; ++i) d[i] -= along * x[i];
        const double dn = norm2(d);
        Vector y(n_);
        for (std::size_t i = 0; i < n_; ++i) y[i] = x[i] + kKinkKick * d[i] / dn;
        normalize(y);
        return y;
    }

    std::size_t n_;
    const SphereObjective& f_;
    const SphereSearchOptions& opt_;
    std::mt19937_64& rng_;
};

}  // namespace

SphereSearchResult maximize_on_sphere(std::size_t n, const SphereObjective& objective,
                                      const SphereSearchOptions& options) {
    if (n == 0) throw Error(ErrorKind::BadDimension, "sphere search needs n >= 1");
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    std::vector<Vector> starts = options.extra_starts;
    for (int r = 0; r < std::max(options.restarts, 1); ++r) {
        Vector x(n);
        for (auto& z : x) z = {normal(rng), normal(rng)};
        starts.push_back(std::move(x));
    }

    SphereSearchResult best{-std::numeric_limits<double>::infinity(), {}};
    Ascent ascent(n, objective, options, rng);
    for (auto& start : starts) {
        if (start.size() != n || norm2(start) == 0.0) continue;
        auto result = ascent.run(std::move(start));
        if (result.value > best.value) best = std::move(result);
    }
    return best;
}

std::vector<Vector> rotated_hermitian_starts(const Matrix& t, int count) {
    std::vector<Vector> out;
    const std::size_t n = t.rows();
    for (int k = 0; k < count; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / count;
        const auto eig = hermitian_eig(hermitian_part(std::polar(1.0, theta) * t));
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = eig.vectors(i, 0);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace qradius::detail
