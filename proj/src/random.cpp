#include <cmath>
#include <random>

#include "qradius/matrix.hpp"

namespace qradius {

namespace {

class GaussianSource {
public:
    GaussianSource(std::uint64_t seed, std::uint64_t stream, std::uint64_t n) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(n)};
        engine_.seed(seq);
    }

    // Standard complex normal: E|z|^2 = 1.
    Complex next() {
        const double re = normal_(engine_);
        const double im = normal_(engine_);
        return {re * M_SQRT1_2, im * M_SQRT1_2};
    }

    Matrix matrix(std::size_t n) {
        Matrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = next();
        return g;
    }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

Matrix gram_schmidt(Matrix g) {
    const std::size_t n = g.rows();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Complex proj{};
            for (std::size_t i = 0; i < n; ++i) proj += std::conj(g(i, j)) * g(i, k);
            for (std::size_t i = 0; i < n; ++i) g(i, k) -= proj * g(i, j);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, k));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < n; ++i) g(i, k) /= nrm;
    }
    return g;
}

constexpr std::uint64_t kUnitaryStream = 0x5eed;

}  // namespace

const char* to_string(Ensemble e) noexcept {
    switch (e) {
        case Ensemble::general: return "general";
        case Ensemble::hermitian: return "hermitian";
        case Ensemble::nilpotent2: return "nilpotent2";
        case Ensemble::normal: return "normal";
    }
    return "unknown";
}

Matrix random_unitary(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::BadDimension, "unitary dimension must be >= 1");
    GaussianSource src(seed, kUnitaryStream, n);
    return gram_schmidt(src.matrix(n));
}

Matrix random_matrix(std::size_t n, Ensemble ensemble, std::uint64_t seed) {
    if (n < 2) throw Error(ErrorKind::BadDimension, "random_matrix needs n >= 2");
    GaussianSource src(seed, static_cast<std::uint64_t>(ensemble) + 1, n);
    switch (ensemble) {
        case Ensemble::general:
            return src.matrix(n);
        case Ensemble::hermitian: {
            const Matrix g = src.matrix(n);
            return 0.5 * (g + adjoint(g));
        }
        case Ensemble::nilpotent2: {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) m(i, j) = src.next();
            return m;
        }
        case Ensemble::normal: {
            std::vector<Complex> spectrum(n);
            for (auto& z : spectrum) z = src.next();
            const Matrix u = gram_schmidt(src.matrix(n));
            return u * Matrix::diagonal(spectrum) * adjoint(u);
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown ensemble");
}

}  // namespace qradius
