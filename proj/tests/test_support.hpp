#pragma once

// Conversions between library matrices and the oracle's dense type, plus
// seeded random inputs for property tests.

#include "oracle.hpp"

#include "rieszlab/seqcore.hpp"

#include <random>

namespace testsupport {

inline oracle::Mat to_oracle(const rieszlab::CMatrix& m) {
    oracle::Mat o(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            o(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return o;
}

inline std::vector<oracle::cplx> to_std(const rieszlab::CVector& v) {
    return std::vector<oracle::cplx>(v.data(), v.data() + v.size());
}

/// i.i.d. complex Gaussian entries.
inline rieszlab::CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    rieszlab::CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = {re, im};
        }
    return m;
}

inline rieszlab::CVector random_vector(std::mt19937_64& rng, Eigen::Index n) {
    return random_matrix(rng, n, 1).col(0);
}

/// Exactly rank-r n x m matrix (product of Gaussian factors).
inline rieszlab::CMatrix random_rank(std::mt19937_64& rng, Eigen::Index n, Eigen::Index m, Eigen::Index r) {
    return random_matrix(rng, n, r) * random_matrix(rng, r, m);
}

/// Haar-like unitary from the QR of a Gaussian matrix.
inline rieszlab::CMatrix random_unitary(std::mt19937_64& rng, Eigen::Index n) {
    Eigen::HouseholderQR<rieszlab::CMatrix> qr(random_matrix(rng, n, n));
    return qr.householderQ() * rieszlab::CMatrix::Identity(n, n);
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

} // namespace testsupport
