#pragma once

// Quantitative Riesz-basis criteria on finite systems.
//
// Every bound here is the optimal constant of the finite model, i.e. an
// extremal eigenvalue of the Gram matrix or an extremal squared singular value
// of the synthesis matrix. Two routes are kept side by side on purpose:
//
//   synthesis route: SVD of F (n x m), singular values accurate to ~eps * sigma_max
//   Gram route:      Hermitian eigensolve of F^H F (m x m)
//
// classify() runs both plus the biorthogonal-dual route and refuses to answer
// if they disagree.

#include "rieszlab/seqcore.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>

namespace rieszlab {

/// Raised when two routes that must agree do not. Always a numerical bug.
class CriteriaDisagreementError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotARieszBasisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Agreement tolerance (relative) between the two Bessel-bound routes.
inline constexpr double kRouteAgreementTol = 1e-8;

/// Gram eigenvalues are only resolved down to about eps * lambda_max; below
/// this floor (times max(n, m)) the Gram route cannot tell zero from tiny.
inline constexpr double kGramResolutionFactor = 16.0 * 2.220446049250313e-16;

struct RieszBounds {
    double lower = 0.0; ///< A: sigma_min(F)^2 over C^m
    double upper = 0.0; ///< B: sigma_max(F)^2
};

struct BoundsReport {
    double riesz_lower = 0.0;
    double bessel_upper = 0.0;
    std::size_t completeness_defect = 0;
    double conditioning = 0.0; ///< B / A, +inf when A == 0
};

struct GramSpectrum {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    bool bijective = false;
};

enum class VerdictKind { RieszBasis, RieszSequenceIncomplete, LinearlyDependent };

std::string_view to_string(VerdictKind kind);

/// Which independent criterion routes were evaluated, and what each concluded.
struct RouteOutcomes {
    VerdictKind synthesis_route = VerdictKind::LinearlyDependent;
    /// Empty when the Gram route cannot resolve lambda_min (below its floor
    /// while the synthesis route still sees an independent system).
    std::optional<VerdictKind> gram_route;
    /// Empty for dependent inputs (no biorthogonal sequence) and for inputs
    /// whose minimal dual cannot be formed to the accuracy contract.
    std::optional<VerdictKind> dual_route;
};

struct Verdict {
    VerdictKind kind = VerdictKind::LinearlyDependent;
    BoundsReport report;
    RouteOutcomes routes;
};

/// Smallest valid Bessel constant; checks lambda_max(gram) against sigma_max^2.
double bessel_bound(const VectorSequence& f);

RieszBounds riesz_bounds(const VectorSequence& f);

/// ambient dim - numerical rank.
std::size_t completeness_defect(const VectorSequence& f);

/// Euclidean distance from h to span(F).
double span_distance(const VectorSequence& f, const CVector& h);

/// Extremes of the Gram spectrum; asserted against riesz_bounds().
GramSpectrum gram_spectrum(const VectorSequence& f);

/// Threshold the Gram route uses for bijectivity: max(tol^2, resolution floor).
double gram_bijectivity_threshold(const VectorSequence& f, double lambda_max);

/// max_{j,k} |<f_k, g_j> - delta_jk|.
double biorthogonality_residual(const VectorSequence& f, const VectorSequence& g);

/// W = (F F^H)^{-1}; under <x, y>_W = y^H W x the system F is orthonormal.
CMatrix equivalent_inner_product(const VectorSequence& f);

/// Gram matrix of F under the inner product <x, y>_W = y^H W x.
CMatrix weighted_gram(const VectorSequence& f, const CMatrix& w);

BoundsReport bounds_report(const VectorSequence& f);

Verdict classify(const VectorSequence& f);

} // namespace rieszlab
