#include "rieszlab/seqcore.hpp"

#include <algorithm>
#include <cmath>

namespace rieszlab {

AmbientSpace::AmbientSpace(std::size_t dim) : dim_(dim) {
    if (dim_ < 1)
        throw InvariantError("AmbientSpace: dimension must be at least 1");
}

bool all_finite(const CMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                return false;
    return true;
}

VectorSequence::VectorSequence(CMatrix columns) : columns_(std::move(columns)) {
    if (columns_.rows() < 1)
        throw InvariantError("VectorSequence: ambient dimension must be at least 1");
    if (columns_.cols() < 1)
        throw InvariantError("VectorSequence: count must be at least 1");
    if (!all_finite(columns_))
        throw InvariantError("VectorSequence: entries must be finite");
}

CoefficientVector::CoefficientVector(CVector entries) : entries_(std::move(entries)) {
    if (!all_finite(entries_))
        throw InvariantError("CoefficientVector: entries must be finite");
}

CoefficientVector CoefficientVector::unit(std::size_t m, std::size_t k) {
    if (k >= m)
        throw DimensionError("CoefficientVector::unit: index out of range");
    CVector v = CVector::Zero(static_cast<Eigen::Index>(m));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return CoefficientVector(std::move(v));
}

GramMatrix::GramMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
        throw DimensionError("GramMatrix: must be square and non-empty");
    if (!all_finite(entries_))
        throw InvariantError("GramMatrix: entries must be finite");

    const double max_abs = entries_.cwiseAbs().maxCoeff();
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * max_abs)
        throw InvariantError("GramMatrix: not Hermitian");

    Eigen::SelfAdjointEigenSolver<CMatrix> eig(entries_, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("GramMatrix: eigensolver failed");
    eigenvalues_ = eig.eigenvalues();

    if (lambda_min() < -1e-10 * std::max(lambda_max(), 0.0))
        throw InvariantError("GramMatrix: not positive semidefinite");
}

cplx inner(const CVector& x, const CVector& y) {
    if (x.size() != y.size())
        throw DimensionError("inner: length mismatch");
    // Eigen's dot conjugates its left operand: y.dot(x) = y^H x.
    return y.dot(x);
}

CVector synthesis(const VectorSequence& f, const CoefficientVector& c) {
    if (c.size() != f.count())
        throw DimensionError("synthesis: coefficient length " + std::to_string(c.size()) +
                             " does not match count " + std::to_string(f.count()));
    return f.columns() * c.entries();
}

CoefficientVector analysis(const VectorSequence& f, const CVector& h) {
    if (static_cast<std::size_t>(h.size()) != f.dim())
        throw DimensionError("analysis: vector length " + std::to_string(h.size()) +
                             " does not match ambient dimension " + std::to_string(f.dim()));
    return CoefficientVector(f.columns().adjoint() * h);
}

GramMatrix gram(const VectorSequence& f) {
    CMatrix g = f.columns().adjoint() * f.columns();
    if (!g.allFinite())
        throw NumericOverflowError("gram: inner products overflow");
    return GramMatrix(std::move(g));
}

CVector frame_apply(const VectorSequence& f, const CVector& h) {
    return synthesis(f, analysis(f, h));
}

RVector synthesis_singular_values(const VectorSequence& f) {
    Eigen::BDCSVD<CMatrix> svd(f.columns());
    RVector padded = RVector::Zero(static_cast<Eigen::Index>(f.count()));
    const RVector& s = svd.singularValues();
    padded.head(s.size()) = s;
    return padded;
}

double rank_tolerance(const CMatrix& m) {
    Eigen::BDCSVD<CMatrix> svd(m);
    const double smax = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    return smax * static_cast<double>(std::max(m.rows(), m.cols())) * kRankTolFactor;
}

double rank_tolerance(const VectorSequence& f) { return rank_tolerance(f.columns()); }

std::size_t numerical_rank(const CMatrix& m) {
    Eigen::BDCSVD<CMatrix> svd(m);
    const RVector& s = svd.singularValues();
    if (s.size() == 0)
        return 0;
    const double tol = s(0) * static_cast<double>(std::max(m.rows(), m.cols())) * kRankTolFactor;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tol)
            ++r;
    return r;
}

std::size_t numerical_rank(const VectorSequence& f) { return numerical_rank(f.columns()); }

VectorSequence identity_columns(std::size_t n) {
    const auto N = static_cast<Eigen::Index>(n);
    return VectorSequence(CMatrix::Identity(N, N));
}

CVector unit_vector(std::size_t n, std::size_t k) {
    if (k >= n)
        throw DimensionError("unit_vector: index out of range");
    CVector v = CVector::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return v;
}

} // namespace rieszlab
