#include "rieszlab/duals.hpp"

#include "rieszlab/diagnostics.hpp"

#include <algorithm>

namespace rieszlab {

VectorSequence minimal_dual(const VectorSequence& f) {
    const RieszBounds b = riesz_bounds(f);
    const double tol = rank_tolerance(f);
    if (!(b.lower > tol * tol))
        throw NoBiorthogonalSequenceError("no biorthogonal sequence exists (minimality fails)");

    const auto n = static_cast<Eigen::Index>(f.dim());
    const auto m = static_cast<Eigen::Index>(f.count());

    Eigen::ColPivHouseholderQR<CMatrix> qr(f.columns());
    const CMatrix q = qr.householderQ() * CMatrix::Identity(n, m);
    const CMatrix r = qr.matrixR().topLeftCorner(m, m).triangularView<Eigen::Upper>();
    const CMatrix pt = qr.colsPermutation().transpose() * CMatrix::Identity(m, m);

    // R^H X = P^T
    const CMatrix x = r.adjoint().triangularView<Eigen::Lower>().solve(pt);
    VectorSequence g(q * x);

    const double residual = biorthogonality_residual(f, g);
    if (!(residual <= kBiorthogonalityTol))
        throw IllConditionedError("minimal_dual: biorthogonality residual " + std::to_string(residual) +
                                  " exceeds tolerance (condition B/A = " +
                                  std::to_string(b.upper / b.lower) + ")");
    return g;
}

double duality_identity_residual(const VectorSequence& f, const VectorSequence& g) {
    if (f.dim() != g.dim() || f.count() != g.count())
        throw DimensionError("duality_identity_residual: F and G must share ambient dimension and count");
    const auto n = static_cast<Eigen::Index>(f.dim());
    const auto m = static_cast<Eigen::Index>(f.count());
    if (2 * m >= n) {
        const CMatrix residual = f.columns() * g.columns().adjoint() - CMatrix::Identity(n, n);
        Eigen::BDCSVD<CMatrix> svd(residual);
        return svd.singularValues()(0);
    }
    // Tall case. With Q orthonormal and span(Q) containing span(F) + span(G),
    // F G^H - I leaves span(Q) invariant and is -I on its complement, so the
    // norm is max(|Q^H F (Q^H G)^H - I|, 1) -- a 2m x 2m problem.
    CMatrix joined(n, 2 * m);
    joined << f.columns(), g.columns();
    Eigen::HouseholderQR<CMatrix> qr(joined);
    const CMatrix q = qr.householderQ() * CMatrix::Identity(n, 2 * m);
    const CMatrix reduced =
        (q.adjoint() * f.columns()) * (q.adjoint() * g.columns()).adjoint() - CMatrix::Identity(2 * m, 2 * m);
    Eigen::BDCSVD<CMatrix> svd(reduced);
    return std::max(svd.singularValues()(0), 1.0);
}

CoCompleteness co_completeness_check(const VectorSequence& f) {
    const VectorSequence g = minimal_dual(f);
    CoCompleteness out;
    out.defect_f = completeness_defect(f);
    out.defect_g = completeness_defect(g);
    out.equal = out.defect_f == out.defect_g;
    return out;
}

CoefficientVector injectivity_witness(const VectorSequence& f, const VectorSequence& g,
                                      const CoefficientVector& c) {
    const double residual = biorthogonality_residual(f, g);
    if (!(residual <= kBiorthogonalityTol))
        throw NotBiorthogonalError("injectivity_witness: pair is not biorthogonal (residual " +
                                   std::to_string(residual) + ")");
    return analysis(g, synthesis(f, c));
}

} // namespace rieszlab
