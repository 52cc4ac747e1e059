#include "qradius/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"

namespace qradius {

namespace {

double clipped_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

// Shared factor 1 - q^2 + q sqrt(1-q^2).
double mixed_weight(QValue q) { return 1.0 - q.q() * q.q() + q.q() * q.p(); }

double crawford_correction(const BoundInputs& in, QValue q, CrawfordTerm term) {
    const double c = term == CrawfordTerm::squared ? in.crawford * in.crawford : in.crawford;
    return (1.0 - q.q() * q.q()) * c;
}

struct ProductTerms {
    Matrix bt;  // B*|T|^{2a}B
    Matrix at;  // A|T*|^{2(1-a)}A*
    Matrix ds;  // D*|S|^{2a}D
    Matrix cs;  // C|S*|^{2(1-a)}C*
};

ProductTerms product_terms(const ProductOperands& ops, AlphaParam alpha) {
    const double a = alpha.value();
    const auto abs_pow = [](const Matrix& x, double e) {
        return hermitian_power(hermitian_part(adjoint(x) * x), e);
    };
    const auto star_abs_pow = [](const Matrix& x, double e) {
        return hermitian_power(hermitian_part(x * adjoint(x)), e);
    };
    return {
        hermitian_part(adjoint(ops.b) * abs_pow(ops.t, a) * ops.b),
        hermitian_part(ops.a * star_abs_pow(ops.t, 1.0 - a) * adjoint(ops.a)),
        hermitian_part(adjoint(ops.d) * abs_pow(ops.s, a) * ops.d),
        hermitian_part(ops.c * star_abs_pow(ops.s, 1.0 - a) * adjoint(ops.c)),
    };
}

}  // namespace

const char* to_string(BoundKind kind) noexcept {
    switch (kind) {
        case BoundKind::OTH1_LOWER: return "OTH1_LOWER";
        case BoundKind::OTH2: return "OTH2";
        case BoundKind::OTH3_LOWER: return "OTH3_LOWER";
        case BoundKind::OTH3_UPPER: return "OTH3_UPPER";
        case BoundKind::TH2: return "TH2";
        case BoundKind::COR2: return "COR2";
        case BoundKind::COR1: return "COR1";
        case BoundKind::TH5: return "TH5";
        case BoundKind::COR3: return "COR3";
        case BoundKind::COR4: return "COR4";
        case BoundKind::COR_M: return "COR_M";
        case BoundKind::OPNORM_UPPER: return "OPNORM_UPPER";
    }
    return "UNKNOWN";
}

bool is_upper(BoundKind kind) noexcept {
    return kind != BoundKind::OTH1_LOWER && kind != BoundKind::OTH3_LOWER;
}

const char* to_string(OracleKind kind) noexcept {
    switch (kind) {
        case OracleKind::exact2x2: return "exact2x2";
        case OracleKind::hermitian: return "hermitian";
        case OracleKind::estimate: return "estimate";
    }
    return "unknown";
}

BoundInputs bound_inputs(const Matrix& t, const SweepConfig& sweep) {
    if (!t.is_square()) throw Error(ErrorKind::ShapeMismatch, "bounds need a square matrix");
    if (t.rows() < 2) throw Error(ErrorKind::Dim1NotSupported, "bounds need n >= 2");
    const auto f = compute_functionals(t, sweep);
    BoundInputs in;
    in.norm = opnorm(t);
    in.sqrt_norm_sq = std::sqrt(opnorm(t * t));
    in.sum_norm = opnorm(hermitian_part(adjoint(t) * t + t * adjoint(t)));
    in.omega = f.omega;
    in.crawford = f.crawford;
    in.m_radius = f.m_radius;
    return in;
}

double eval_scalar_bound(BoundKind kind, const BoundInputs& in, QValue q, CrawfordTerm crawford) {
    const double qq = q.q();
    const double p = q.p();
    const double n2 = in.norm * in.norm;
    const double half_sum_sq = 0.25 * qq * qq * std::pow(in.norm + in.sqrt_norm_sq, 2);
    const double k = mixed_weight(q);

    switch (kind) {
        case BoundKind::OTH1_LOWER:
            return qq * in.norm / (2.0 * (2.0 - qq * qq));
        case BoundKind::OPNORM_UPPER:
            return in.norm;
        case BoundKind::OTH2:
            return clipped_sqrt(half_sum_sq + (1.0 - qq * qq + 2.0 * qq * p) * n2);
        case BoundKind::OTH3_LOWER:
            return qq * std::sqrt(in.sum_norm) / (2.0 * (2.0 - qq * qq));
        case BoundKind::OTH3_UPPER:
            if (qq == 0.0) {
                throw Error(ErrorKind::ZeroQUnsupported, "OTH3_UPPER diverges as q -> 0");
            }
            // q / (1 - p) == (1 + p) / q, without the cancellation in 1 - p.
            return std::sqrt(0.5 * in.sum_norm) * (1.0 + p) / qq;
        case BoundKind::TH2:
            return clipped_sqrt(qq * qq * in.omega * in.omega + k * n2);
        case BoundKind::COR2:
            return clipped_sqrt(half_sum_sq + k * n2);
        case BoundKind::COR1:
            return clipped_sqrt(0.5 * qq * qq * in.sum_norm + k * n2);
        case BoundKind::TH5:
            return clipped_sqrt(qq * qq * in.omega * in.omega + k * n2 -
                                crawford_correction(in, q, crawford));
        case BoundKind::COR3:
            return clipped_sqrt(half_sum_sq + k * n2 - crawford_correction(in, q, crawford));
        case BoundKind::COR4:
            return clipped_sqrt(0.5 * qq * qq * in.sum_norm + k * n2 -
                                crawford_correction(in, q, crawford));
        case BoundKind::COR_M:
            return qq * in.omega + p * in.m_radius;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown bound kind");
}

double eval_scalar_bound(BoundKind kind, const Matrix& t, QValue q, CrawfordTerm crawford) {
    return eval_scalar_bound(kind, bound_inputs(t), q, crawford);
}

AlphaParam::AlphaParam(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorKind::AlphaOutOfRange, "alpha = " + std::to_string(alpha) + " not in [0,1]");
    }
}

Matrix ProductOperands::product() const { return a * t * b + c * s * d; }

double eval_product_bound_q(const ProductOperands& ops, AlphaParam alpha, QValue q) {
    const auto terms = product_terms(ops, alpha);
    const double sum = opnorm(terms.bt + terms.at + terms.ds + terms.cs);
    const double cross = std::sqrt(opnorm(terms.bt) * opnorm(terms.at)) +
                         std::sqrt(opnorm(terms.ds) * opnorm(terms.cs));
    const double weight = q.p() + std::sqrt(2.0 * q.q() * q.p());
    return 0.5 * q.q() * sum + weight * cross;
}

double eval_product_bound_qfree(const ProductOperands& ops, AlphaParam alpha) {
    const auto terms = product_terms(ops, alpha);
    return 0.5 * (opnorm(terms.at + terms.cs) + opnorm(terms.bt + terms.ds));
}

double omega_q_block(const Matrix& block, QValue q, const OracleConfig& cfg) {
    if (!block.is_square() || block.empty()) {
        throw Error(ErrorKind::ShapeMismatch, "diagonal blocks must be square and non-empty");
    }
    if (block.rows() == 1) return q.q() * std::abs(block(0, 0));
    return omega_q(block, q, cfg);
}

BlockBounds eval_block_bounds(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                              QValue q, const OracleConfig& cfg) {
    const Matrix off = block_compose(Matrix::zeros(a.rows()), b, c, Matrix::zeros(d.rows()));
    const double qq = q.q();
    const double p = q.p();

    BlockBounds out;
    out.lower = std::max({omega_q_block(a, q, cfg), omega_q_block(d, q, cfg), omega_q(off, q, cfg)});

    const double na = opnorm(a), nb = opnorm(b), nc = opnorm(c), nd = opnorm(d);
    out.upper_ii = std::max(na, nd) + clipped_sqrt(1.0 - 0.75 * qq * qq + qq * p) * (nb + nc);
    const double w = std::max(numerical_radius(a), numerical_radius(d));
    out.upper_iii = p * std::sqrt(na * na + nb * nb + nc * nc + nd * nd) + qq * (w + 0.5 * (nb + nc));
    return out;
}

std::optional<double> BoundReport::value(BoundKind kind) const {
    for (const auto& e : entries)
        if (e.kind == kind) return e.value;
    return std::nullopt;
}

OracleKind oracle_kind_for(const Matrix& t) {
    if (t.rows() == 2) return OracleKind::exact2x2;
    if (is_hermitian(t)) return OracleKind::hermitian;
    return OracleKind::estimate;
}

std::vector<BoundReport> compare_bounds(const Matrix& t, const std::vector<QValue>& grid,
                                        const OracleConfig& cfg, double tol) {
    const BoundInputs in = bound_inputs(t);
    const OracleKind kind = oracle_kind_for(t);

    std::vector<BoundReport> reports(grid.size(), BoundReport(QValue(0.0)));
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        const QValue q = grid[i];
        BoundReport r(q);
        r.oracle_kind = kind;
        r.oracle = omega_q(t, q, cfg);
        for (BoundKind bk : kAllBoundKinds) {
            if (bk == BoundKind::OTH3_UPPER && q.q() == 0.0) continue;
            const double v = eval_scalar_bound(bk, in, q);
            const bool upper = is_upper(bk);
            r.entries.push_back({bk, v, upper});
            const bool bad = upper ? v < r.oracle - tol : v > r.oracle + tol;
            if (bad) r.violations.push_back(bk);
        }
        r.th5_linear = eval_scalar_bound(BoundKind::TH5, in, q, CrawfordTerm::linear);
        r.th5_linear_below_oracle = r.th5_linear < r.oracle - tol;
        reports[i] = std::move(r);
    });
    return reports;
}

std::vector<QValue> q_grid(int count) {
    if (count < 2) throw Error(ErrorKind::InvalidArgument, "q grid needs at least 2 points");
    std::vector<QValue> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.emplace_back(i == count - 1 ? 1.0 : double(i) / (count - 1));
    return out;
}

}  // namespace qradius
