#pragma once

// Biorthogonal duals and the reconstruction identity T_F T_G^* = I.

#include "rieszlab/seqcore.hpp"

#include <stdexcept>

namespace rieszlab {

/// Dependent columns: the system is not minimal, so no biorthogonal sequence exists.
class NoBiorthogonalSequenceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A dual was formed but misses the biorthogonality accuracy contract.
class IllConditionedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotBiorthogonalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kBiorthogonalityTol = 1e-8;

/// The biorthogonal sequence lying inside span(F): G = F (F^H F)^{-1}.
///
/// Formed from a column-pivoted QR of F (F P = Q R gives G = Q R^{-H} P^T),
/// so the error scales with cond(F) rather than cond(F)^2. The result is
/// checked against kBiorthogonalityTol before it is returned.
VectorSequence minimal_dual(const VectorSequence& f);

/// Spectral norm of T_F T_G^* - I, where T_F T_G^* h = sum_k <h, g_k> f_k.
double duality_identity_residual(const VectorSequence& f, const VectorSequence& g);

struct CoCompleteness {
    std::size_t defect_f = 0;
    std::size_t defect_g = 0;
    bool equal = false;
};

/// Completeness defects of F and of minimal_dual(F).
CoCompleteness co_completeness_check(const VectorSequence& f);

/// (<T_F c, g_j>)_j, which equals c for a biorthogonal pair.
CoefficientVector injectivity_witness(const VectorSequence& f, const VectorSequence& g,
                                      const CoefficientVector& c);

} // namespace rieszlab
