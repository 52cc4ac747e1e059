#include "qradius/qrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "golden.hpp"
#include "sphere_search.hpp"

namespace qradius {

namespace {

constexpr int kEllipseGrid = 2048;
constexpr int kEllipseRefineIters = 100;
constexpr double kEllipseRefineTol = 1e-15;
constexpr int kAngleStarts = 8;

void require_dim2(const Matrix& t) {
    if (t.rows() != 2 || t.cols() != 2) throw Error(ErrorKind::Dim2Required, "matrix must be 2x2");
}

void require_range_dim(const Matrix& t) {
    if (!t.is_square()) throw Error(ErrorKind::ShapeMismatch, "matrix must be square");
    if (t.rows() < 2) {
        throw Error(ErrorKind::Dim1NotSupported, "W_q is empty in dimension 1 unless q = 1");
    }
}

double phase_or_zero(Complex z) { return z == Complex{} ? 0.0 : std::arg(z); }

// Parametric description of the boundary of W_q for a 2x2 matrix.
struct Ellipse2x2 {
    Complex rotation;  // e^{it}
    Complex center;    // gamma q
    double semi_re;    // c + p d
    double semi_im;    // d + p c

    Complex at(double s) const {
        return rotation * (center + Complex{semi_re * std::cos(s), semi_im * std::sin(s)});
    }
};

Ellipse2x2 ellipse_2x2(const Matrix& t, QValue q) {
    const auto cf = canonical_form_2x2(t);
    const double c = 0.5 * (cf.a + cf.b);
    const double d = 0.5 * (cf.a - cf.b);
    return {std::polar(1.0, cf.t), cf.gamma * q.q(), c + q.p() * d, d + q.p() * c};
}

struct HermitianEllipse {
    double center;
    double semi_major;
    double semi_minor;
};

HermitianEllipse hermitian_ellipse(const Matrix& h, QValue q) {
    const auto eig = hermitian_eig(h);
    const double top = eig.values.front();
    const double bottom = eig.values.back();
    const double half_spread = 0.5 * (top - bottom);
    return {0.5 * q.q() * (top + bottom), half_spread, q.p() * half_spread};
}

double qrange_objective(const Matrix& t, QValue q, std::span<const Complex> x) {
    Vector tx = t * x;
    const Complex s = inner(tx, x);
    for (std::size_t i = 0; i < tx.size(); ++i) tx[i] -= s * x[i];
    return q.q() * std::abs(s) + q.p() * norm2(tx);
}

detail::SphereSearchOptions search_options(const Matrix& t, const OracleConfig& cfg) {
    detail::SphereSearchOptions opt;
    opt.restarts = cfg.restarts;
    opt.max_iters = cfg.max_iters;
    opt.step_tol = cfg.step_tol;
    opt.seed = cfg.seed;
    opt.extra_starts = detail::rotated_hermitian_starts(t, kAngleStarts);
    return opt;
}

std::vector<Complex> closed_sweep(int resolution, auto&& point_at) {
    std::vector<Complex> pts;
    pts.reserve(resolution + 1);
    for (int k = 0; k < resolution; ++k) pts.push_back(point_at(k));
    pts.push_back(pts.front());
    return pts;
}

}  // namespace

const char* to_string(RangeKind kind) noexcept {
    switch (kind) {
        case RangeKind::ellipse2x2: return "ellipse2x2";
        case RangeKind::hermitian_ellipse: return "hermitian_ellipse";
        case RangeKind::support_sweep: return "support_sweep";
    }
    return "unknown";
}

Matrix Canonical2x2::form() const {
    const Complex rot = std::polar(1.0, t);
    return Matrix{{rot * gamma, rot * a}, {rot * b, rot * gamma}};
}

void OracleConfig::validate() const {
    if (restarts < 1) throw Error(ErrorKind::InvalidArgument, "restarts must be >= 1");
    if (max_iters < 1) throw Error(ErrorKind::InvalidArgument, "max_iters must be >= 1");
    if (!(step_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "step_tol must be > 0");
}

Canonical2x2 canonical_form_2x2(const Matrix& t) {
    require_dim2(t);
    const Complex half_trace = 0.5 * trace(t);
    const Matrix traceless = t - half_trace * Matrix::identity(2);

    // Stage 1: a unit x with <T0 x, x> = 0, where T0 = T - tr(T)/2. In the
    // eigenbasis u1, u2 of Re(T0) every x = (u1 + e u2)/sqrt2 with |e| = 1
    // annihilates the real part; e is then chosen to annihilate Im(T0).
    const auto re = hermitian_eig(hermitian_part(traceless));
    const Matrix im = hermitian_part(Complex{0.0, -1.0} * traceless);
    const Vector u1{re.vectors(0, 0), re.vectors(1, 0)};
    const Vector u2{re.vectors(0, 1), re.vectors(1, 1)};
    const Complex k12 = inner(im * std::span<const Complex>(u2), u1);
    const double k12_abs = std::abs(k12);
    const Complex e = k12_abs > 0.0 ? Complex{0.0, 1.0} * std::conj(k12) / k12_abs : Complex{1.0};

    Matrix u(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        u(i, 0) = (u1[i] + e * u2[i]) * M_SQRT1_2;
        u(i, 1) = (u1[i] - e * u2[i]) * M_SQRT1_2;
    }
    const Matrix rotated = adjoint(u) * t * u;

    // Stage 2: equalize off-diagonal phases with diag(1, e^{i psi}).
    const Complex upper = rotated(0, 1);
    const Complex lower = rotated(1, 0);
    const double arg_upper = phase_or_zero(upper);
    const double arg_lower = phase_or_zero(lower);
    const double psi = 0.5 * (arg_lower - arg_upper);
    double phase = 0.5 * (arg_upper + arg_lower);

    Matrix witness = u * Matrix::diagonal({Complex{1.0}, std::polar(1.0, psi)});
    double a = std::abs(upper);
    double b = std::abs(lower);
    if (b > a) {
        witness = witness * Matrix{{0.0, 1.0}, {1.0, 0.0}};
        std::swap(a, b);
    }
    phase = std::fmod(phase, 2.0 * std::numbers::pi);
    if (phase < 0.0) phase += 2.0 * std::numbers::pi;
    if (phase >= 2.0 * std::numbers::pi) phase = 0.0;  // -tiny + 2pi rounds up

    return {phase, half_trace * std::polar(1.0, -phase), a, b, std::move(witness)};
}

double omega_q_2x2_exact(const Matrix& t, QValue q) {
    require_dim2(t);
    const auto ellipse = ellipse_2x2(t, q);
    const auto modulus = [&](double s) { return std::abs(ellipse.at(s)); };
    return detail::periodic_maximize(modulus, kEllipseGrid, kEllipseRefineIters, kEllipseRefineTol)
        .value;
}

double omega_q_hermitian(const Matrix& h, QValue q) {
    require_range_dim(h);
    if (!is_hermitian(h)) throw Error(ErrorKind::NotHermitian, "omega_q_hermitian needs H = H*");
    // |center + A cos s + i B sin s|^2 with B <= A is convex in cos s, so the
    // maximum sits at a vertex of the major axis.
    const auto e = hermitian_ellipse(h, q);
    return std::abs(e.center) + e.semi_major;
}

double omega_q_estimate(const Matrix& t, QValue q, const OracleConfig& cfg) {
    require_range_dim(t);
    cfg.validate();
    const auto objective = [&](std::span<const Complex> x) { return qrange_objective(t, q, x); };
    return detail::maximize_on_sphere(t.rows(), objective, search_options(t, cfg)).value;
}

double omega_q(const Matrix& t, QValue q, const OracleConfig& cfg) {
    require_range_dim(t);
    if (t.rows() == 2) return omega_q_2x2_exact(t, q);
    if (is_hermitian(t)) return omega_q_hermitian(t, q);
    return omega_q_estimate(t, q, cfg);
}

RangeSample wq_boundary(const Matrix& t, QValue q, int resolution, const OracleConfig& cfg) {
    require_range_dim(t);
    if (resolution < 16) throw Error(ErrorKind::InvalidArgument, "resolution must be >= 16");
    const double step = 2.0 * std::numbers::pi / resolution;

    if (t.rows() == 2) {
        const auto ellipse = ellipse_2x2(t, q);
        return {q, closed_sweep(resolution, [&](int k) { return ellipse.at(k * step); }),
                RangeKind::ellipse2x2};
    }
    if (is_hermitian(t)) {
        const auto e = hermitian_ellipse(t, q);
        const auto at = [&](int k) {
            return Complex{e.center + e.semi_major * std::cos(k * step),
                           e.semi_minor * std::sin(k * step)};
        };
        return {q, closed_sweep(resolution, at), RangeKind::hermitian_ellipse};
    }

    // Support sweep: for direction theta maximize
    //   q Re(e^{-i theta} <Tx,x>) + p ||Tx - <Tx,x> x||,
    // and report the attaining point q <Tx,x> + p ||P Tx|| e^{i theta} of W_q(T).
    cfg.validate();
    auto opt = search_options(t, cfg);
    const auto at = [&](int k) {
        const double theta = k * step;
        const Complex turn = std::polar(1.0, -theta);
        const auto support = [&](std::span<const Complex> x) {
            Vector tx = t * x;
            const Complex s = inner(tx, x);
            for (std::size_t i = 0; i < tx.size(); ++i) tx[i] -= s * x[i];
            return q.q() * (turn * s).real() + q.p() * norm2(tx);
        };
        const auto best = detail::maximize_on_sphere(t.rows(), support, opt);
        opt.extra_starts.push_back(best.x);
        Vector tx = t * std::span<const Complex>(best.x);
        const Complex s = inner(tx, best.x);
        for (std::size_t i = 0; i < tx.size(); ++i) tx[i] -= s * best.x[i];
        return q.q() * s + q.p() * norm2(tx) * std::polar(1.0, theta);
    };
    return {q, closed_sweep(resolution, at), RangeKind::support_sweep};
}

}  // namespace qradius
