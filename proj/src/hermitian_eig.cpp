#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qradius/matrix.hpp"

namespace qradius {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_mass(const Matrix& h) {
    double acc = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (i != j) acc += std::norm(h(i, j));
    return std::sqrt(acc);
}

// Annihilates h(p,q) with the unitary J = [[c, s e], [-s conj(e), c]] acting on
// coordinates p and q, where e = h(p,q)/|h(p,q)|. Updates h <- J* h J and v <- v J.
void rotate(Matrix& h, Matrix& v, std::size_t p, std::size_t q) {
    const Complex hpq = h(p, q);
    const double r = std::abs(hpq);
    if (r == 0.0) return;
    const Complex e = hpq / r;
    const double theta = (h(q, q).real() - h(p, p).real()) / (2.0 * r);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const std::size_t n = h.rows();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex kp = h(k, p);
        const Complex kq = h(k, q);
        h(k, p) = c * kp - s * std::conj(e) * kq;
        h(k, q) = s * e * kp + c * kq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex pk = h(p, k);
        const Complex qk = h(q, k);
        h(p, k) = c * pk - s * e * qk;
        h(q, k) = s * std::conj(e) * pk + c * qk;
    }
    h(p, q) = 0.0;
    h(q, p) = 0.0;
    h(p, p) = h(p, p).real();
    h(q, q) = h(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex kp = v(k, p);
        const Complex kq = v(k, q);
        v(k, p) = c * kp - s * std::conj(e) * kq;
        v(k, q) = s * e * kp + c * kq;
    }
}

}  // namespace

EigenDecomposition hermitian_eig(const Matrix& h_in) {
    if (!h_in.is_square()) {
        throw Error(ErrorKind::NotHermitian, "matrix is not square");
    }
    if (!is_hermitian(h_in, kHermitianTol)) {
        throw Error(ErrorKind::NotHermitian, "||H - H*||_max exceeds tolerance");
    }
    const std::size_t n = h_in.rows();
    Matrix h = hermitian_part(h_in);
    Matrix v = Matrix::identity(n);

    const double scale = frobenius_norm(h);
    int sweep = 0;
    while (off_diagonal_mass(h) > kOffDiagonalTol * scale) {
        if (++sweep > kMaxSweeps) {
            throw Error(ErrorKind::NoConvergence,
                        "Jacobi iteration exceeded " + std::to_string(kMaxSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(h, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return h(a, a).real() > h(b, b).real();
    });

    EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = h(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

Matrix hermitian_power(const Matrix& h, double exponent) {
    if (!(exponent >= 0.0) || !std::isfinite(exponent)) {
        throw Error(ErrorKind::InvalidArgument, "exponent must be finite and >= 0");
    }
    const auto eig = hermitian_eig(h);
    const std::size_t n = h.rows();
    double spread = 1.0;
    for (double l : eig.values) spread = std::max(spread, std::abs(l));

    std::vector<double> powered(n);
    for (std::size_t k = 0; k < n; ++k) {
        double l = eig.values[k];
        if (l < -kHermitianTol * spread) {
            throw Error(ErrorKind::NegativeEigenvalue,
                        "eigenvalue " + std::to_string(l) + " below clipping threshold");
        }
        l = std::max(l, 0.0);
        powered[k] = std::pow(l, exponent);  // pow(0, 0) == 1
    }

    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < n; ++k)
                acc += eig.vectors(i, k) * powered[k] * std::conj(eig.vectors(j, k));
            out(i, j) = acc;
        }
    }
    return hermitian_part(out);
}

Matrix abs_value(const Matrix& t) {
    if (!t.is_square()) throw Error(ErrorKind::ShapeMismatch, "abs_value needs a square matrix");
    return hermitian_power(hermitian_part(adjoint(t) * t), 0.5);
}

double opnorm(const Matrix& t) {
    if (t.empty()) return 0.0;
    const auto eig = hermitian_eig(hermitian_part(adjoint(t) * t));
    return std::sqrt(std::max(eig.values.front(), 0.0));
}

}  // namespace qradius
