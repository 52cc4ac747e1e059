#pragma once

#include <cstdint>
#include <vector>

#include "qradius/matrix.hpp"

namespace qradius {

/// Unitary normal form of a 2x2 matrix: U* T U = e^{it} [[gamma, a], [b, gamma]], 0 <= b <= a.
struct Canonical2x2 {
    double t = 0.0;  // in [0, 2pi)
    Complex gamma{};
    double a = 0.0;
    double b = 0.0;
    Matrix unitary;

    /// e^{it} [[gamma, a], [b, gamma]].
    Matrix form() const;
};

struct OracleConfig {
    int restarts = 64;
    int max_iters = 500;
    double step_tol = 1e-12;
    std::uint64_t seed = 42;

    void validate() const;
};

enum class RangeKind { ellipse2x2, hermitian_ellipse, support_sweep };

const char* to_string(RangeKind kind) noexcept;

/// Sampled boundary of W_q(T); closed, so points.front() == points.back().
struct RangeSample {
    QValue q;
    std::vector<Complex> points;
    RangeKind kind;
};

Canonical2x2 canonical_form_2x2(const Matrix& t);

/// Exact w_q for 2x2 matrices: the maximum modulus over the boundary ellipse
/// e^{it}(gamma q + (c + p d) cos s + i (d + p c) sin s), c = (a+b)/2, d = (a-b)/2.
double omega_q_2x2_exact(const Matrix& t, QValue q);

/// Exact w_q for Hermitian matrices. W_q(H) is the filled ellipse with foci
/// q lambda_1, q lambda_n and minor axis sqrt(1-q^2)(lambda_1 - lambda_n).
double omega_q_hermitian(const Matrix& h, QValue q);

/// Lower-bound estimate of w_q(T) for any square T with n >= 2, maximizing
///   f(x) = q |<Tx,x>| + sqrt(1-q^2) ||Tx - <Tx,x> x||
/// over unit x. The sup over y = qx + sqrt(1-q^2) z is taken analytically.
double omega_q_estimate(const Matrix& t, QValue q, const OracleConfig& cfg = {});

/// The strongest available value: exact for 2x2, exact for Hermitian, otherwise the estimate.
double omega_q(const Matrix& t, QValue q, const OracleConfig& cfg = {});

RangeSample wq_boundary(const Matrix& t, QValue q, int resolution, const OracleConfig& cfg = {});

}  // namespace qradius
