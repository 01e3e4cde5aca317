#pragma once

// Core data model: finite sections of sequences in a separable Hilbert space,
// modeled as complex column matrices, plus the synthesis / analysis / Gram
// operators everything else is built from.
//
// Inner-product convention used throughout the library:
//
//     <x, y> = y^H x        (linear in x, conjugate-linear in y)
//
// so the analysis operator maps h to (<h, f_k>)_k = F^H h and the Gram matrix
// has entry (j, k) = <f_k, f_j> = f_j^H f_k, i.e. G = F^H F.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace rieszlab {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Thrown when operand shapes do not match.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a value violates a type invariant (non-finite entries, empty systems, ...).
class InvariantError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computed quantity left the double range (e.g. squared entries near 1e155 and up).
class NumericOverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Relative factor of the shared numerical-rank tolerance:
/// tol = sigma_max * max(n, m) * kRankTolFactor.
inline constexpr double kRankTolFactor = 1e-12;

class AmbientSpace {
public:
    explicit AmbientSpace(std::size_t dim);
    std::size_t dim() const noexcept { return dim_; }
    friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;

private:
    std::size_t dim_;
};

/// Finite section (f_1, ..., f_m) of a sequence in an n-dimensional model space.
/// Column k of columns() holds f_{k+1}.
class VectorSequence {
public:
    explicit VectorSequence(CMatrix columns);

    AmbientSpace ambient() const { return AmbientSpace(static_cast<std::size_t>(columns_.rows())); }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(columns_.rows()); }
    std::size_t count() const noexcept { return static_cast<std::size_t>(columns_.cols()); }

    const CMatrix& columns() const noexcept { return columns_; }
    CVector column(std::size_t k) const { return columns_.col(static_cast<Eigen::Index>(k)); }

private:
    CMatrix columns_;
};

/// Finite model of a coefficient sequence (c_k) in l^2.
class CoefficientVector {
public:
    explicit CoefficientVector(CVector entries);
    /// The k-th standard unit coefficient vector delta_k of length m.
    static CoefficientVector unit(std::size_t m, std::size_t k);

    std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.size()); }
    const CVector& entries() const noexcept { return entries_; }

private:
    CVector entries_;
};

/// Hermitian PSD matrix of pairwise inner products, entry (j, k) = <f_k, f_j>.
/// The ascending eigenvalues are computed once at construction; they back the
/// PSD invariant and every Gram-route spectral criterion.
class GramMatrix {
public:
    explicit GramMatrix(CMatrix entries);

    std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const CMatrix& entries() const noexcept { return entries_; }
    const RVector& eigenvalues() const noexcept { return eigenvalues_; }
    double lambda_min() const { return eigenvalues_(0); }
    double lambda_max() const { return eigenvalues_(eigenvalues_.size() - 1); }

private:
    CMatrix entries_;
    RVector eigenvalues_;
};

/// <x, y> = y^H x.
cplx inner(const CVector& x, const CVector& y);

/// Sum_k c_k f_k.
CVector synthesis(const VectorSequence& f, const CoefficientVector& c);

/// (<h, f_k>)_k.
CoefficientVector analysis(const VectorSequence& f, const CVector& h);

GramMatrix gram(const VectorSequence& f);

/// Sum_k <h, f_k> f_k, i.e. T_F T_F^* h.
CVector frame_apply(const VectorSequence& f, const CVector& h);

/// Singular values of the synthesis matrix, descending, padded with zeros up
/// to length count() so that the last entry is sigma_min of T_F on C^m.
RVector synthesis_singular_values(const VectorSequence& f);

/// sigma_max * max(n, m) * kRankTolFactor for the given matrix.
double rank_tolerance(const CMatrix& m);
double rank_tolerance(const VectorSequence& f);

/// Number of singular values above rank_tolerance().
std::size_t numerical_rank(const CMatrix& m);
std::size_t numerical_rank(const VectorSequence& f);

/// VectorSequence whose columns are the standard basis e_1..e_n.
VectorSequence identity_columns(std::size_t n);

/// e_{k+1} in C^n (zero-based k).
CVector unit_vector(std::size_t n, std::size_t k);

bool all_finite(const CMatrix& m);

} // namespace rieszlab
