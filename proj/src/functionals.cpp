#include "qradius/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "golden.hpp"
#include "sphere_search.hpp"

namespace qradius {

namespace {

void require_square(const Matrix& t, const char* what) {
    if (!t.is_square() || t.rows() == 0) {
        throw Error(ErrorKind::ShapeMismatch, std::string(what) + " needs a non-empty square matrix");
    }
}

double periodic_max(const std::function<double(double)>& f, const SweepConfig& cfg) {
    return detail::periodic_maximize(f, cfg.angle_count, cfg.refine_iters, cfg.tol).value;
}

double rotated_extreme_eigenvalue(const Matrix& t, double theta, bool largest) {
    const auto eig = hermitian_eig(hermitian_part(std::polar(1.0, theta) * t));
    return largest ? eig.values.front() : eig.values.back();
}

Matrix shifted(const Matrix& t, Complex lambda) {
    Matrix out = t;
    for (std::size_t i = 0; i < t.rows(); ++i) out(i, i) -= lambda;
    return out;
}

}  // namespace

void SweepConfig::validate() const {
    if (angle_count < 16) throw Error(ErrorKind::InvalidArgument, "angle_count must be >= 16");
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol must be > 0");
    if (refine_iters < 0) throw Error(ErrorKind::InvalidArgument, "refine_iters must be >= 0");
}

double numerical_radius(const Matrix& t, const SweepConfig& cfg) {
    require_square(t, "numerical_radius");
    cfg.validate();
    return periodic_max([&](double th) { return rotated_extreme_eigenvalue(t, th, true); }, cfg);
}

double crawford_number(const Matrix& t, const SweepConfig& cfg) {
    require_square(t, "crawford_number");
    cfg.validate();
    const double support =
        periodic_max([&](double th) { return rotated_extreme_eigenvalue(t, th, false); }, cfg);
    return std::max(0.0, support);
}

TranscendentalRadius transcendental_radius(const Matrix& t, const SweepConfig& cfg) {
    require_square(t, "transcendental_radius");
    cfg.validate();
    const double radius = opnorm(t);
    if (radius == 0.0) return {0.0, Complex{}};

    // Enough iterations to shrink a bracket of width 2||T|| below tol.
    const int iters = static_cast<int>(std::ceil(std::log(2.0 * radius / cfg.tol) /
                                                 std::log(std::numbers::phi))) + 2;
    const double tol = cfg.tol;

    double best_im = 0.0;
    auto inner = [&](double re) {
        const auto r = detail::golden_minimize(
            [&](double im) { return opnorm(shifted(t, Complex{re, im})); }, -radius, radius,
            iters, tol);
        best_im = r.arg;
        return r.value;
    };
    const auto outer = detail::golden_minimize(inner, -radius, radius, iters, tol);
    inner(outer.arg);
    const Complex mu{outer.arg, best_im};
    return {opnorm(shifted(t, mu)), mu};
}

double prasanna_sup(const Matrix& t, int restarts, std::uint64_t seed) {
    require_square(t, "prasanna_sup");
    if (t.rows() < 2) throw Error(ErrorKind::Dim1NotSupported, "prasanna_sup needs n >= 2");
    detail::SphereSearchOptions opt;
    opt.restarts = restarts;
    opt.seed = seed;
    opt.extra_starts = detail::rotated_hermitian_starts(t, 8);
    const auto objective = [&](std::span<const Complex> x) {
        Vector tx = t * x;
        const Complex s = inner(tx, x);
        for (std::size_t i = 0; i < tx.size(); ++i) tx[i] -= s * x[i];
        return norm2(tx);
    };
    return detail::maximize_on_sphere(t.rows(), objective, opt).value;
}

Functionals compute_functionals(const Matrix& t, const SweepConfig& cfg) {
    const auto m = transcendental_radius(t, cfg);
    return {numerical_radius(t, cfg), crawford_number(t, cfg), m.m, m.mu};
}

}  // namespace qradius
