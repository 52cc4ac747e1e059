#include "qradius/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qradius {

namespace {

void require_finite(std::span<const Complex> entries) {
    for (const auto& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
        }
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::ShapeMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorKind::ShapeMismatch,
                    "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                        std::to_string(data_.size()));
    }
    require_finite(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::ShapeMismatch, "ragged initializer list");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    require_finite(m.entries());
    return m;
}

Matrix Matrix::diagonal(std::initializer_list<Complex> diag) {
    return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "operator+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "operator-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(Complex s, Matrix m) { return m *= s; }
Matrix operator*(Matrix m, Complex s) { return m *= s; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "product of " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
                        " and " + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
    }
    Matrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

Vector operator*(const Matrix& m, std::span<const Complex> x) {
    if (m.cols() != x.size()) {
        throw Error(ErrorKind::ShapeMismatch, "matrix-vector product");
    }
    Vector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
    Complex acc{};
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
    return acc;
}

double norm2(std::span<const Complex> x) {
    double acc = 0.0;
    for (const auto& z : x) acc += std::norm(z);
    return std::sqrt(acc);
}

QValue::QValue(double q) : q_(q), p_(0.0) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw Error(ErrorKind::QOutOfRange, "q = " + std::to_string(q) + " not in [0,1]");
    }
    p_ = std::sqrt((1.0 - q) * (1.0 + q));
}

Matrix adjoint(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

Matrix hermitian_part(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "hermitian_part needs a square matrix");
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
            out(i, j) = z;
            out(j, i) = std::conj(z);
        }
    }
    return out;
}

Complex trace(const Matrix& m) {
    Complex acc{};
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) acc += m(i, i);
    return acc;
}

double max_abs(const Matrix& m) {
    double best = 0.0;
    for (const auto& z : m.entries()) best = std::max(best, std::abs(z));
    return best;
}

double frobenius_norm(const Matrix& m) { return norm2(m.entries()); }

bool is_hermitian(const Matrix& m, double tol) {
    if (!m.is_square()) return false;
    const double scale = std::max(1.0, max_abs(m));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol * scale) return false;
    return true;
}

Matrix block_compose(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    const std::size_t n1 = a.rows();
    const std::size_t n2 = d.rows();
    const bool ok = a.is_square() && d.is_square() && b.rows() == n1 && b.cols() == n2 &&
                    c.rows() == n2 && c.cols() == n1;
    if (!ok) throw Error(ErrorKind::ShapeMismatch, "blocks are not conformable");
    Matrix out(n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n1; ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < n2; ++j) out(i, n1 + j) = b(i, j);
    }
    for (std::size_t i = 0; i < n2; ++i) {
        for (std::size_t j = 0; j < n1; ++j) out(n1 + i, j) = c(i, j);
        for (std::size_t j = 0; j < n2; ++j) out(n1 + i, n1 + j) = d(i, j);
    }
    return out;
}

}  // namespace qradius
