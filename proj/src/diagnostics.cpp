#include "rieszlab/diagnostics.hpp"

#include "rieszlab/duals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rieszlab {

namespace {

bool agree_relative(double a, double b, double rel) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel * scale;
}

VerdictKind verdict_from(bool independent, std::size_t defect) {
    if (!independent)
        return VerdictKind::LinearlyDependent;
    return defect == 0 ? VerdictKind::RieszBasis : VerdictKind::RieszSequenceIncomplete;
}

} // namespace

std::string_view to_string(VerdictKind kind) {
    switch (kind) {
    case VerdictKind::RieszBasis: return "RieszBasis";
    case VerdictKind::RieszSequenceIncomplete: return "RieszSequenceIncomplete";
    case VerdictKind::LinearlyDependent: return "LinearlyDependent";
    }
    return "unknown";
}

double bessel_bound(const VectorSequence& f) {
    const double via_gram = std::max(gram(f).lambda_max(), 0.0);
    const double smax = synthesis_singular_values(f)(0);
    const double via_svd = smax * smax;
    if (!agree_relative(via_gram, via_svd, kRouteAgreementTol))
        throw CriteriaDisagreementError("bessel_bound: Gram route " + std::to_string(via_gram) +
                                        " disagrees with synthesis route " + std::to_string(via_svd));
    return via_svd;
}

RieszBounds riesz_bounds(const VectorSequence& f) {
    const RVector s = synthesis_singular_values(f);
    const double smin = s(s.size() - 1);
    return {smin * smin, s(0) * s(0)};
}

std::size_t completeness_defect(const VectorSequence& f) {
    return f.dim() - numerical_rank(f);
}

double span_distance(const VectorSequence& f, const CVector& h) {
    if (static_cast<std::size_t>(h.size()) != f.dim())
        throw DimensionError("span_distance: vector length does not match ambient dimension");
    Eigen::BDCSVD<CMatrix> svd(f.columns(), Eigen::ComputeThinU);
    const RVector& s = svd.singularValues();
    const double tol = s(0) * static_cast<double>(std::max(f.dim(), f.count())) * kRankTolFactor;
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > tol)
        ++r;
    const CMatrix basis = svd.matrixU().leftCols(r);
    const CVector residual = h - basis * (basis.adjoint() * h);
    return std::min(residual.norm(), h.norm());
}

double gram_bijectivity_threshold(const VectorSequence& f, double lambda_max) {
    const double tol = rank_tolerance(f);
    const double floor = std::max(lambda_max, 0.0) *
                         static_cast<double>(std::max(f.dim(), f.count())) * kGramResolutionFactor;
    return std::max(tol * tol, floor);
}

GramSpectrum gram_spectrum(const VectorSequence& f) {
    const GramMatrix g = gram(f);
    GramSpectrum out;
    out.lambda_min = g.lambda_min();
    out.lambda_max = g.lambda_max();
    out.bijective = out.lambda_min > gram_bijectivity_threshold(f, out.lambda_max);

    const RieszBounds b = riesz_bounds(f);
    const double scale = std::max(b.upper, std::numeric_limits<double>::min());
    if (std::abs(out.lambda_max - b.upper) > kRouteAgreementTol * scale ||
        std::abs(out.lambda_min - b.lower) > kRouteAgreementTol * scale)
        throw CriteriaDisagreementError("gram_spectrum: Gram extremes (" + std::to_string(out.lambda_min) +
                                        ", " + std::to_string(out.lambda_max) +
                                        ") disagree with synthesis bounds (" + std::to_string(b.lower) +
                                        ", " + std::to_string(b.upper) + ")");
    return out;
}

double biorthogonality_residual(const VectorSequence& f, const VectorSequence& g) {
    if (f.dim() != g.dim() || f.count() != g.count())
        throw DimensionError("biorthogonality_residual: F and G must share ambient dimension and count");
    const auto m = static_cast<Eigen::Index>(f.count());
    // entry (j, k) = g_j^H f_k = <f_k, g_j>
    const CMatrix cross = g.columns().adjoint() * f.columns();
    return (cross - CMatrix::Identity(m, m)).cwiseAbs().maxCoeff();
}

CMatrix equivalent_inner_product(const VectorSequence& f) {
    const Verdict v = classify(f);
    if (v.kind != VerdictKind::RieszBasis)
        throw NotARieszBasisError(std::string("equivalent_inner_product: input classifies as ") +
                                  std::string(to_string(v.kind)));
    // (F F^H)^{-1} = F^{-H} F^{-1}; forming F^{-1} avoids squaring the condition number.
    const CMatrix inv = f.columns().partialPivLu().inverse();
    return inv.adjoint() * inv;
}

CMatrix weighted_gram(const VectorSequence& f, const CMatrix& w) {
    if (static_cast<std::size_t>(w.rows()) != f.dim() || w.rows() != w.cols())
        throw DimensionError("weighted_gram: weight must be n x n");
    return f.columns().adjoint() * w * f.columns();
}

BoundsReport bounds_report(const VectorSequence& f) {
    const RieszBounds b = riesz_bounds(f);
    BoundsReport r;
    r.riesz_lower = b.lower;
    r.bessel_upper = b.upper;
    r.completeness_defect = completeness_defect(f);
    r.conditioning = b.lower > 0.0 ? b.upper / b.lower : std::numeric_limits<double>::infinity();
    return r;
}

Verdict classify(const VectorSequence& f) {
    Verdict v;
    v.report = bounds_report(f);
    const double tol = rank_tolerance(f);
    const bool independent = v.report.riesz_lower > tol * tol;
    v.kind = verdict_from(independent, v.report.completeness_defect);
    v.routes.synthesis_route = v.kind;

    // Gram route: bijectivity of the Gram operator plus completeness.
    const GramSpectrum gs = gram_spectrum(f);
    const bool resolvable = gs.bijective || !independent ||
                            v.report.riesz_lower > gram_bijectivity_threshold(f, gs.lambda_max);
    if (resolvable)
        v.routes.gram_route = verdict_from(gs.bijective, v.report.completeness_defect);

    // Dual route: Bessel F, biorthogonal Bessel G, and one of them complete.
    if (independent) {
        try {
            const VectorSequence g = minimal_dual(f);
            const bool biorthogonal = biorthogonality_residual(f, g) <= kBiorthogonalityTol;
            const bool bessel_pair = std::isfinite(bessel_bound(f)) && std::isfinite(bessel_bound(g));
            const bool one_complete = completeness_defect(f) == 0 || completeness_defect(g) == 0;
            if (biorthogonal && bessel_pair)
                v.routes.dual_route = one_complete ? VerdictKind::RieszBasis
                                                   : VerdictKind::RieszSequenceIncomplete;
        } catch (const IllConditionedError&) {
            // accuracy contract not met; route left unevaluated
        }
    }

    auto check = [&](const std::optional<VerdictKind>& route, const char* name) {
        if (route && *route != v.kind)
            throw CriteriaDisagreementError(std::string("classify: ") + name + " route says " +
                                            std::string(to_string(*route)) + ", synthesis route says " +
                                            std::string(to_string(v.kind)));
    };
    check(v.routes.gram_route, "Gram");
    check(v.routes.dual_route, "dual");
    return v;
}

} // namespace rieszlab
