#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qradius/functionals.hpp"
#include "qradius/matrix.hpp"
#include "qradius/qrange.hpp"

namespace qradius {

// Closed-form bounds on w_q(T). Tags follow the literature they come from:
// OTH* are earlier results, TH*/COR* the refinements built on them.
enum class BoundKind {
    OTH1_LOWER,
    OTH2,
    OTH3_LOWER,
    OTH3_UPPER,
    TH2,
    COR2,
    COR1,
    TH5,
    COR3,
    COR4,
    COR_M,
    OPNORM_UPPER,
};

inline constexpr std::array<BoundKind, 12> kAllBoundKinds = {
    BoundKind::OTH1_LOWER, BoundKind::OTH2, BoundKind::OTH3_LOWER, BoundKind::OTH3_UPPER,
    BoundKind::TH2,        BoundKind::COR2, BoundKind::COR1,       BoundKind::TH5,
    BoundKind::COR3,       BoundKind::COR4, BoundKind::COR_M,      BoundKind::OPNORM_UPPER,
};

const char* to_string(BoundKind kind) noexcept;
bool is_upper(BoundKind kind) noexcept;

/// How the Crawford correction enters TH5/COR3/COR4: -(1-q^2) c^2 (default) or -(1-q^2) c.
enum class CrawfordTerm { squared, linear };

/// Matrix quantities every scalar bound is assembled from.
struct BoundInputs {
    double norm = 0.0;         // ||T||
    double sqrt_norm_sq = 0.0; // ||T^2||^(1/2)
    double sum_norm = 0.0;     // ||T*T + TT*||
    double omega = 0.0;        // w(T)
    double crawford = 0.0;     // c(T)
    double m_radius = 0.0;     // m(T)
};

BoundInputs bound_inputs(const Matrix& t, const SweepConfig& sweep = {});

double eval_scalar_bound(BoundKind kind, const BoundInputs& in, QValue q,
                         CrawfordTerm crawford = CrawfordTerm::squared);
double eval_scalar_bound(BoundKind kind, const Matrix& t, QValue q,
                         CrawfordTerm crawford = CrawfordTerm::squared);

class AlphaParam {
public:
    explicit AlphaParam(double alpha);
    double value() const noexcept { return alpha_; }

private:
    double alpha_;
};

/// Operands of A T B + C S D.
struct ProductOperands {
    Matrix a, b, c, d, s, t;

    Matrix product() const;
};

/// q/2 ||B*|T|^{2a}B + A|T*|^{2(1-a)}A* + D*|S|^{2a}D + C|S*|^{2(1-a)}C*||
///   + (sqrt(1-q^2) + sqrt(2q sqrt(1-q^2))) (sqrt(||B*|T|^{2a}B|| ||A|T*|^{2(1-a)}A*||)
///                                          + sqrt(||D*|S|^{2a}D|| ||C|S*|^{2(1-a)}C*||))
double eval_product_bound_q(const ProductOperands& ops, AlphaParam alpha, QValue q);

/// 1/2 (||A|T*|^{2(1-a)}A* + C|S*|^{2(1-a)}C*|| + ||B*|T|^{2a}B + D*|S|^{2a}D||); independent of q.
double eval_product_bound_qfree(const ProductOperands& ops, AlphaParam alpha);

struct BlockBounds {
    double lower = 0.0;     // max{w_q(A), w_q(D), w_q([[0,B],[C,0]])}
    double upper_ii = 0.0;  // max{||A||,||D||} + (1 - 3q^2/4 + q p)^(1/2) (||B|| + ||C||)
    double upper_iii = 0.0; // p (sum of squared block norms)^(1/2) + q (max{w(A), w(D)} + (||B||+||C||)/2)
};

/// Bounds on w_q([[A, B], [C, D]]). A 1x1 diagonal block [a] contributes q|a|
/// to the lower bound.
BlockBounds eval_block_bounds(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                              QValue q, const OracleConfig& cfg = {});

/// w_q of a square matrix, with the 1x1 convention w_q([a]) = q|a|.
double omega_q_block(const Matrix& block, QValue q, const OracleConfig& cfg = {});

enum class OracleKind { exact2x2, hermitian, estimate };

const char* to_string(OracleKind kind) noexcept;

struct BoundEntry {
    BoundKind kind;
    double value;
    bool is_upper;
};

struct BoundReport {
    explicit BoundReport(QValue q_value) : q(q_value) {}

    QValue q;
    double oracle = 0.0;
    OracleKind oracle_kind = OracleKind::estimate;
    std::vector<BoundEntry> entries;  // OTH3_UPPER omitted at q = 0
    std::vector<BoundKind> violations;
    double th5_linear = 0.0;          // TH5 with the -(1-q^2) c(T) correction
    bool th5_linear_below_oracle = false;

    std::optional<double> value(BoundKind kind) const;
};

OracleKind oracle_kind_for(const Matrix& t);

std::vector<BoundReport> compare_bounds(const Matrix& t, const std::vector<QValue>& q_grid,
                                        const OracleConfig& cfg = {}, double tol = 1e-6);

/// Equally spaced grid {0, 1/(count-1), ..., 1}.
std::vector<QValue> q_grid(int count);

}  // namespace qradius
