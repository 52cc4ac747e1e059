#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qradius/matrix.hpp"

using namespace qradius;

namespace {

double max_diff(const Matrix& a, const Matrix& b) {
    REQUIRE(a.rows() == b.rows());
    REQUIRE(a.cols() == b.cols());
    double d = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

template <class F>
void expect_kind(ErrorKind kind, F&& f) {
    try {
        f();
        FAIL("expected " << to_string(kind));
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
    }
}

}  // namespace

TEST_CASE("matrix construction validates shape and finiteness") {
    expect_kind(ErrorKind::ShapeMismatch, [] { Matrix(2, 2, {1.0, 2.0, 3.0}); });
    expect_kind(ErrorKind::NonFinite, [] { Matrix(1, 1, {Complex{std::nan(""), 0.0}}); });
    expect_kind(ErrorKind::NonFinite, [] { Matrix(1, 1, {Complex{0.0, INFINITY}}); });
    const Matrix m{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(m(1, 0) == Complex{3.0});
    expect_kind(ErrorKind::ShapeMismatch, [&] { (void)(m * Matrix(3, 3)); });
    expect_kind(ErrorKind::ShapeMismatch, [&] { (void)(m + Matrix(3, 3)); });
}

TEST_CASE("adjoint examples") {
    const Matrix t1{{0.0, 1.0 / 35}, {0.0, 0.0}};
    CHECK(adjoint(t1) == Matrix{{0.0, 0.0}, {1.0 / 35, 0.0}});
    CHECK(adjoint(Matrix{{Complex{0.0, 1.0}}}) == Matrix{{Complex{0.0, -1.0}}});
    const Matrix t2{{0.0, 1.0 / 25}, {1.0 / 36, 0.0}};
    CHECK(adjoint(t2) == Matrix{{0.0, 1.0 / 36}, {1.0 / 25, 0.0}});
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Matrix t = random_matrix(3, Ensemble::general, s);
        CHECK(adjoint(adjoint(t)) == t);
    }
}

TEST_CASE("QValue") {
    for (double q : {0.0, 0.3, 0.6, 0.999, 1.0}) {
        const QValue v(q);
        CHECK(std::abs(v.p() * v.p() + v.q() * v.q() - 1.0) <= 1e-15);
    }
    CHECK(QValue(0.6).p() == doctest::Approx(0.8).epsilon(1e-15));
    expect_kind(ErrorKind::QOutOfRange, [] { QValue(-1e-9); });
    expect_kind(ErrorKind::QOutOfRange, [] { QValue(1.0 + 1e-12); });
    expect_kind(ErrorKind::QOutOfRange, [] { QValue(std::nan("")); });
}

TEST_CASE("hermitian_eig examples") {
    auto e = hermitian_eig(Matrix::diagonal({1.0, 2.0}));
    CHECK(e.values[0] == doctest::Approx(2.0));
    CHECK(e.values[1] == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors(0, 1)) == doctest::Approx(1.0));

    e = hermitian_eig(Matrix{{0.0, 1.0}, {1.0, 0.0}});
    CHECK(e.values[0] == doctest::Approx(1.0));
    CHECK(e.values[1] == doctest::Approx(-1.0));

    const Matrix t{{0.0, 1.0 / 35}, {0.0, 0.0}};
    e = hermitian_eig(adjoint(t) * t);
    CHECK(std::abs(e.values[0] - 1.0 / (35.0 * 35.0)) <= 1e-18);
    CHECK(std::abs(e.values[1]) <= 1e-18);
}

TEST_CASE("hermitian_eig errors") {
    expect_kind(ErrorKind::NotHermitian, [] { hermitian_eig(Matrix{{0.0, 1.0}, {0.0, 0.0}}); });
    expect_kind(ErrorKind::NotHermitian, [] { hermitian_eig(Matrix{{Complex{0.0, 1e-6}}}); });
    // A non-square matrix cannot equal its adjoint.
    expect_kind(ErrorKind::NotHermitian, [] { hermitian_eig(Matrix(2, 3)); });
}

TEST_CASE("hermitian_eig agrees with the 2x2 closed form") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const Matrix h = random_matrix(2, Ensemble::hermitian, s);
        const auto [l1, l2] = oracle::herm_eig2(oracle::m2(h));
        const auto e = hermitian_eig(h);
        CHECK(std::abs(e.values[0] - l1) <= 1e-12);
        CHECK(std::abs(e.values[1] - l2) <= 1e-12);
    }
}

TEST_CASE("eigen reconstruction and unitarity on 1000 random Hermitian matrices") {
    int failures = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const std::size_t n = 2 + s % 7;
        const Matrix h = random_matrix(n, Ensemble::hermitian, s);
        const auto e = hermitian_eig(h);
        std::vector<Complex> lam(e.values.begin(), e.values.end());
        const Matrix rebuilt = e.vectors * Matrix::diagonal(lam) * adjoint(e.vectors);
        const double scale = std::max(1.0, frobenius_norm(h));
        if (max_diff(rebuilt, h) > 1e-10 * scale) ++failures;
        if (max_diff(adjoint(e.vectors) * e.vectors, Matrix::identity(n)) > 1e-10) ++failures;
        for (std::size_t k = 1; k < n; ++k)
            if (e.values[k] > e.values[k - 1]) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("hermitian_power") {
    CHECK(max_diff(hermitian_power(Matrix::diagonal({4.0, 9.0}), 0.5), Matrix::diagonal({2.0, 3.0})) <=
          1e-14);
    const Matrix t{{0.0, 1.0 / 35}, {0.0, 0.0}};
    CHECK(max_diff(hermitian_power(adjoint(t) * t, 0.5), Matrix::diagonal({0.0, 1.0 / 35})) <= 1e-15);
    // 0^0 = 1, so the zeroth power of any PSD matrix is the identity.
    CHECK(max_diff(hermitian_power(Matrix::zeros(3), 0.0), Matrix::identity(3)) == 0.0);

    for (std::uint64_t s = 0; s < 50; ++s) {
        const Matrix g = random_matrix(3, Ensemble::general, s);
        const Matrix h = hermitian_part(adjoint(g) * g);
        CHECK(max_diff(hermitian_power(h, 1.0), h) <= 1e-10 * std::max(1.0, max_abs(h)));
        for (double a : {0.25, 0.5, 1.0})
            for (double b : {0.25, 0.5, 1.0}) {
                const Matrix lhs = hermitian_power(h, a + b);
                const Matrix rhs = hermitian_power(h, a) * hermitian_power(h, b);
                CHECK(max_diff(lhs, rhs) <= 1e-9 * std::max(1.0, max_abs(lhs)));
            }
    }

    expect_kind(ErrorKind::NegativeEigenvalue, [] { hermitian_power(Matrix::diagonal({1.0, -0.5}), 0.5); });
    expect_kind(ErrorKind::NotHermitian, [] { hermitian_power(Matrix{{0.0, 1.0}, {0.0, 0.0}}, 0.5); });
    expect_kind(ErrorKind::InvalidArgument, [] { hermitian_power(Matrix::identity(2), -1.0); });
    // Roundoff-sized negatives are clipped, not rejected.
    CHECK_NOTHROW(hermitian_power(Matrix::diagonal({1.0, -1e-14}), 0.5));
}

TEST_CASE("abs_value and opnorm") {
    const Matrix t{{0.0, 1.0 / 35}, {0.0, 0.0}};
    CHECK(max_diff(abs_value(t), Matrix::diagonal({0.0, 1.0 / 35})) <= 1e-15);
    CHECK(opnorm(t) == doctest::Approx(1.0 / 35).epsilon(1e-14));
    CHECK(opnorm(Matrix{{0.0, 1.0 / 25}, {1.0 / 36, 0.0}}) == doctest::Approx(1.0 / 25).epsilon(1e-14));
    CHECK(opnorm(Matrix::identity(5)) == doctest::Approx(1.0));
    CHECK(max_diff(abs_value(random_unitary(4, 7)), Matrix::identity(4)) <= 1e-10);
    const Matrix psd = Matrix{{2.0, Complex{0.0, 1.0}}, {Complex{0.0, -1.0}, 2.0}};
    CHECK(max_diff(abs_value(psd), psd) <= 1e-12);

    for (std::uint64_t s = 0; s < 200; ++s) {
        const std::size_t n = 2 + s % 4;
        const Matrix g = random_matrix(n, Ensemble::general, s);
        CHECK(std::abs(opnorm(g) - opnorm(adjoint(g))) <= 1e-10);
        CHECK(std::abs(opnorm(abs_value(g)) - opnorm(g)) <= 1e-10);
        if (n == 2) CHECK(std::abs(opnorm(g) - oracle::opnorm2(g)) <= 1e-12);
    }
}

TEST_CASE("block_compose") {
    const Matrix z{{0.0}};
    CHECK(block_compose(z, Matrix{{1.0 / 35}}, z, z) == Matrix{{0.0, 1.0 / 35}, {0.0, 0.0}});
    CHECK(block_compose(Matrix{{1.0}}, Matrix{{2.0}}, Matrix{{3.0}}, Matrix{{4.0}}) ==
          Matrix{{1.0, 2.0}, {3.0, 4.0}});
    const Matrix a = random_matrix(2, Ensemble::general, 1);
    const Matrix d = random_matrix(3, Ensemble::general, 2);
    const Matrix full = block_compose(a, Matrix(2, 3), Matrix(3, 2), d);
    CHECK(full.rows() == 5);
    CHECK(full(0, 4) == Complex{});
    CHECK(full(4, 4) == d(2, 2));
    CHECK(full(1, 0) == a(1, 0));
    expect_kind(ErrorKind::ShapeMismatch, [&] { block_compose(a, Matrix(2, 2), Matrix(3, 2), d); });
    expect_kind(ErrorKind::ShapeMismatch, [&] { block_compose(Matrix(2, 3), Matrix(2, 3), Matrix(3, 2), d); });
}

TEST_CASE("random_matrix ensembles") {
    const Matrix nil = random_matrix(2, Ensemble::nilpotent2, 5);
    CHECK(nil(0, 0) == Complex{});
    CHECK(nil(1, 0) == Complex{});
    CHECK(nil(1, 1) == Complex{});
    CHECK(nil(0, 1) != Complex{});
    const Matrix h = random_matrix(3, Ensemble::hermitian, 9);
    CHECK(max_diff(h, adjoint(h)) == 0.0);
    for (Ensemble e : {Ensemble::general, Ensemble::hermitian, Ensemble::nilpotent2, Ensemble::normal}) {
        CHECK(random_matrix(4, e, 11) == random_matrix(4, e, 11));
        CHECK_FALSE(random_matrix(4, e, 11) == random_matrix(4, e, 12));
    }
    const Matrix n = random_matrix(4, Ensemble::normal, 3);
    CHECK(max_diff(adjoint(n) * n, n * adjoint(n)) <= 1e-12);
    const Matrix u = random_unitary(5, 3);
    CHECK(max_diff(adjoint(u) * u, Matrix::identity(5)) <= 1e-12);
    expect_kind(ErrorKind::BadDimension, [] { random_matrix(1, Ensemble::general, 0); });
}
