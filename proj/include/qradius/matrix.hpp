#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "qradius/error.hpp"

namespace qradius {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

// Dense complex matrix, row-major, finite entries only.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix zeros(std::size_t n) { return Matrix(n, n); }
    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const Complex> diag);
    static Matrix diagonal(std::initializer_list<Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(Complex s);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(Complex s, Matrix m);
Matrix operator*(Matrix m, Complex s);

Vector operator*(const Matrix& m, std::span<const Complex> x);

/// <x, y> = sum_i x_i conj(y_i); linear in the first argument.
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm2(std::span<const Complex> x);

/// Parameter of the q-numerical range; q in [0,1] with p = sqrt(1 - q^2).
class QValue {
public:
    explicit QValue(double q);

    double q() const noexcept { return q_; }
    double p() const noexcept { return p_; }

private:
    double q_;
    double p_;
};

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Matrix vectors;              // unitary, eigenvectors as columns
};

Matrix adjoint(const Matrix& m);
/// (M + M*) / 2.
Matrix hermitian_part(const Matrix& m);
Complex trace(const Matrix& m);
double max_abs(const Matrix& m);
double frobenius_norm(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = 1e-12);

EigenDecomposition hermitian_eig(const Matrix& h);
Matrix hermitian_power(const Matrix& h, double exponent);
/// |T| = (T*T)^(1/2).
Matrix abs_value(const Matrix& t);
/// Largest singular value.
double opnorm(const Matrix& t);

Matrix block_compose(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

enum class Ensemble { general, hermitian, nilpotent2, normal };

const char* to_string(Ensemble e) noexcept;

Matrix random_matrix(std::size_t n, Ensemble ensemble, std::uint64_t seed);
/// Haar-distributed unitary from Gram-Schmidt on a complex Gaussian matrix.
Matrix random_unitary(std::size_t n, std::uint64_t seed);

}  // namespace qradius
