#pragma once

// Truncation studies: build a family of systems at increasing sizes, measure
// bounds and dual metrics per size, and fit power laws in the size.

#include "rieszlab/generators.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rieszlab {

class FitDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class FamilySpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Generator failure at one size; the original exception is nested.
class FamilyRunError : public std::runtime_error {
public:
    FamilyRunError(std::size_t size, const std::string& what)
        : std::runtime_error("size " + std::to_string(size) + ": " + what), size_(size) {}
    std::size_t size() const noexcept { return size_; }

private:
    std::size_t size_;
};

enum class GeneratorId {
    Orthonormal,
    WeightedPair,
    AlternatingWeightedPair,
    YoungExample,
    YoungGeneral,
    RieszSeeded,
    GaborPunctured,
    GaborALS,
    GaborFullLattice,
};

std::string_view to_string(GeneratorId id);

struct FamilyParameters {
    std::uint64_t seed = 1;
    std::size_t complement_dim = 2;  ///< YoungGeneral
    double lattice_a = 1.0;          ///< GaborFullLattice
    double lattice_b = 1.0;          ///< GaborFullLattice
    double half_width = 6.0;         ///< Gabor families
    int samples_per_unit = 16;       ///< Gabor families
    std::size_t probe_index = 0;     ///< defect-distance probe e_{probe_index+1}
};

/// What "size" means per generator:
///   Orthonormal, WeightedPair, AlternatingWeightedPair, RieszSeeded: n
///   YoungExample, YoungGeneral: ambient dimension (N = size - complement)
///   GaborPunctured, GaborFullLattice: max lattice index; GaborALS: n_max
struct FamilySpec {
    GeneratorId generator = GeneratorId::Orthonormal;
    FamilyParameters params;
    std::vector<std::size_t> sizes;

    /// Throws FamilySpecError.
    void validate() const;
};

enum class Asymptotic { Diverges, VanishesToZero, StaysBounded, StaysBoundedBelow };

std::string_view to_string(Asymptotic a);

struct SizeMetrics {
    std::size_t size = 0;
    double riesz_lower_f = 0.0;
    double bessel_upper_f = 0.0;
    std::optional<double> defect_distance_f;
    std::optional<double> bessel_upper_dual;
    std::optional<double> duality_residual;
};

struct GrowthFit {
    double exponent = 0.0;
    double r_squared = 0.0;
    /// True when every value was numerically zero; recorded as a constant.
    bool identically_zero = false;
};

struct ScalingReport {
    std::vector<SizeMetrics> per_size;
    std::map<std::string, GrowthFit> fits;
    std::map<std::string, Asymptotic> verdicts;
};

/// Metric names used as keys in ScalingReport::fits / verdicts.
namespace metric {
inline constexpr const char* kRieszLowerF = "rieszLowerF";
inline constexpr const char* kBesselUpperF = "besselUpperF";
inline constexpr const char* kDefectDistanceF = "defectDistanceF";
inline constexpr const char* kBesselUpperDual = "besselUpperDual";
inline constexpr const char* kDualityResidual = "dualityResidual";
} // namespace metric

/// Values at or below this are treated as exact zeros by the fitter.
inline constexpr double kZeroFloor = 1e-12;

// Verdict thresholds.
inline constexpr double kExponentBand = 0.2;
inline constexpr double kMinR2 = 0.9;
inline constexpr double kBoundedBelowFloor = 1e-6;

/// Least-squares slope of log(value) against log(size) with its r^2.
/// A constant series has r^2 = 1.
GrowthFit fit_growth(const std::vector<double>& sizes, const std::vector<double>& values);

Asymptotic classify_growth(const GrowthFit& fit, double min_value);

/// Builds the system at one size (F and, when the family names one, G).
GeneratedPair build_family_member(const FamilySpec& spec, std::size_t size);

/// Metrics of one system: bounds of F, distance of the probe to span(F), and
/// dual metrics against G (the named partner, else the minimal dual if it exists).
SizeMetrics evaluate_member(std::size_t size, const GeneratedPair& pair, std::size_t probe_index);

/// Sizes are evaluated concurrently (capped by RIESZLAB_THREADS); the report
/// is ordered by size.
ScalingReport run_family(const FamilySpec& spec);

/// Gabor system of a fixed point set under successive discretizations; each
/// per-size record is keyed by samples_per_unit.
ScalingReport gabor_refinement_study(const PointSet2D& points,
                                     const std::vector<GaborDiscretization>& discretizations);

/// Worker count: RIESZLAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_threads();

} // namespace rieszlab
