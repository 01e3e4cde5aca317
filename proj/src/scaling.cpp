#include "rieszlab/scaling.hpp"

#include "rieszlab/diagnostics.hpp"
#include "rieszlab/duals.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <thread>

namespace rieszlab {

std::string_view to_string(GeneratorId id) {
    switch (id) {
    case GeneratorId::Orthonormal: return "orthonormal";
    case GeneratorId::WeightedPair: return "weightedPair";
    case GeneratorId::AlternatingWeightedPair: return "alternatingWeightedPair";
    case GeneratorId::YoungExample: return "youngExample";
    case GeneratorId::YoungGeneral: return "youngGeneral";
    case GeneratorId::RieszSeeded: return "rieszSeeded";
    case GeneratorId::GaborPunctured: return "gaborPunctured";
    case GeneratorId::GaborALS: return "gaborALS";
    case GeneratorId::GaborFullLattice: return "gaborFullLattice";
    }
    return "unknown";
}

std::string_view to_string(Asymptotic a) {
    switch (a) {
    case Asymptotic::Diverges: return "Diverges";
    case Asymptotic::VanishesToZero: return "VanishesToZero";
    case Asymptotic::StaysBounded: return "StaysBounded";
    case Asymptotic::StaysBoundedBelow: return "StaysBoundedBelow";
    }
    return "unknown";
}

void FamilySpec::validate() const {
    if (sizes.size() < 3)
        throw FamilySpecError("family needs at least 3 sizes for an exponent fit");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1)
            throw FamilySpecError("family sizes must be positive");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw FamilySpecError("family sizes must be strictly increasing");
    }
    if (generator == GeneratorId::YoungExample && sizes.front() < 2)
        throw FamilySpecError("youngExample sizes are ambient dimensions and must be at least 2");
    if (generator == GeneratorId::YoungGeneral &&
        (params.complement_dim < 1 || sizes.front() <= params.complement_dim))
        throw FamilySpecError("youngGeneral sizes must exceed the complement dimension");
}

GrowthFit fit_growth(const std::vector<double>& sizes, const std::vector<double>& values) {
    if (sizes.size() != values.size())
        throw FitDomainError("fit_growth: sizes and values differ in length");
    if (sizes.size() < 3)
        throw FitDomainError("fit_growth: need at least 3 points");
    const std::size_t n = sizes.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(sizes[i] > 0.0))
            throw FitDomainError("fit_growth: sizes must be positive");
        if (!(values[i] > 0.0) || !std::isfinite(values[i]))
            throw FitDomainError("fit_growth: values must be positive and finite");
        lx[i] = std::log(sizes[i]);
        ly[i] = std::log(values[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (!(sxx > 0.0))
        throw FitDomainError("fit_growth: sizes must not all coincide");

    GrowthFit fit;
    fit.exponent = sxy / sxx;
    if (syy <= 1e-24) {
        fit.r_squared = 1.0;
    } else {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = ly[i] - (my + fit.exponent * (lx[i] - mx));
            ss_res += r * r;
        }
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

Asymptotic classify_growth(const GrowthFit& fit, double min_value) {
    if (fit.exponent > kExponentBand && fit.r_squared > kMinR2)
        return Asymptotic::Diverges;
    if (fit.exponent < -kExponentBand && fit.r_squared > kMinR2)
        return Asymptotic::VanishesToZero;
    if (std::abs(fit.exponent) <= kExponentBand && min_value > kBoundedBelowFloor)
        return Asymptotic::StaysBoundedBelow;
    // Flat, or no power law established by the fit.
    return Asymptotic::StaysBounded;
}

GeneratedPair build_family_member(const FamilySpec& spec, std::size_t size) {
    const auto& p = spec.params;
    const int index = static_cast<int>(size);
    switch (spec.generator) {
    case GeneratorId::Orthonormal: return {orthonormal(size), std::nullopt};
    case GeneratorId::WeightedPair: return weighted_pair(size);
    case GeneratorId::AlternatingWeightedPair: return alternating_weighted_pair(size);
    case GeneratorId::YoungExample:
        if (size < 2)
            throw FamilySpecError("youngExample size is the ambient dimension and must be at least 2");
        return young_example(size - 1);
    case GeneratorId::YoungGeneral:
        if (size <= p.complement_dim)
            throw FamilySpecError("youngGeneral size must exceed the complement dimension");
        return young_general(size - p.complement_dim, p.complement_dim, size - p.complement_dim);
    case GeneratorId::RieszSeeded:
        // distinct, reproducible stream per size
        return {random_riesz(size, p.seed * 1000003ULL + size), std::nullopt};
    case GeneratorId::GaborPunctured:
        return {gaussian_gabor(punctured_lattice(index), GaborDiscretization(p.half_width, p.samples_per_unit)),
                std::nullopt};
    case GeneratorId::GaborALS:
        return {gaussian_gabor(als_point_set(index), GaborDiscretization(p.half_width, p.samples_per_unit)),
                std::nullopt};
    case GeneratorId::GaborFullLattice:
        return {gaussian_gabor(lattice_points(p.lattice_a, p.lattice_b, index),
                               GaborDiscretization(p.half_width, p.samples_per_unit)),
                std::nullopt};
    }
    throw FamilySpecError("unknown generator");
}

SizeMetrics evaluate_member(std::size_t size, const GeneratedPair& pair, std::size_t probe_index) {
    SizeMetrics m;
    m.size = size;
    const RieszBounds b = riesz_bounds(pair.f);
    m.riesz_lower_f = b.lower;
    m.bessel_upper_f = b.upper;
    if (probe_index < pair.f.dim())
        m.defect_distance_f = span_distance(pair.f, unit_vector(pair.f.dim(), probe_index));

    std::optional<VectorSequence> dual = pair.g;
    if (!dual) {
        try {
            dual = minimal_dual(pair.f);
        } catch (const NoBiorthogonalSequenceError&) {
        } catch (const IllConditionedError&) {
        }
    }
    if (dual) {
        m.bessel_upper_dual = bessel_bound(*dual);
        m.duality_residual = duality_identity_residual(pair.f, *dual);
    }
    return m;
}

unsigned worker_threads() {
    if (const char* env = std::getenv("RIESZLAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs task(i) for i in [0, n) on up to worker_threads() threads. Returns the
// per-index exception (null on success).
std::vector<std::exception_ptr> parallel_for(std::size_t n, const std::function<void(std::size_t)>& task) {
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::min<std::size_t>(worker_threads(), n);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    return errors;
}

[[noreturn]] void rethrow_annotated(std::size_t size, const std::exception_ptr& error) {
    try {
        std::rethrow_exception(error);
    } catch (const std::exception& e) {
        std::throw_with_nested(FamilyRunError(size, e.what()));
    } catch (...) {
        std::throw_with_nested(FamilyRunError(size, "unknown error"));
    }
}

void add_fit(ScalingReport& report, const char* name, const std::vector<double>& sizes,
             const std::vector<std::optional<double>>& values) {
    if (sizes.size() < 3)
        return;
    bool all_present = true, all_zero = true, all_positive = true;
    double min_value = std::numeric_limits<double>::infinity();
    for (const auto& v : values) {
        if (!v) {
            all_present = false;
            break;
        }
        all_zero = all_zero && *v <= kZeroFloor;
        all_positive = all_positive && *v > kZeroFloor;
        min_value = std::min(min_value, *v);
    }
    if (!all_present)
        return;
    if (all_zero) {
        report.fits[name] = GrowthFit{0.0, 1.0, true};
        report.verdicts[name] = Asymptotic::StaysBounded;
        return;
    }
    // Mixed zero / nonzero series have no log-log fit.
    if (!all_positive)
        return;
    std::vector<double> v;
    v.reserve(values.size());
    for (const auto& x : values)
        v.push_back(*x);
    const GrowthFit fit = fit_growth(sizes, v);
    report.fits[name] = fit;
    report.verdicts[name] = classify_growth(fit, min_value);
}

void fill_fits(ScalingReport& report) {
    std::vector<double> sizes;
    std::vector<std::optional<double>> lower, upper, distance, dual_upper, residual;
    for (const auto& m : report.per_size) {
        sizes.push_back(static_cast<double>(m.size));
        lower.emplace_back(m.riesz_lower_f);
        upper.emplace_back(m.bessel_upper_f);
        distance.push_back(m.defect_distance_f);
        dual_upper.push_back(m.bessel_upper_dual);
        residual.push_back(m.duality_residual);
    }
    add_fit(report, metric::kRieszLowerF, sizes, lower);
    add_fit(report, metric::kBesselUpperF, sizes, upper);
    add_fit(report, metric::kDefectDistanceF, sizes, distance);
    add_fit(report, metric::kBesselUpperDual, sizes, dual_upper);
    add_fit(report, metric::kDualityResidual, sizes, residual);
}

} // namespace

ScalingReport run_family(const FamilySpec& spec) {
    spec.validate();
    ScalingReport report;
    report.per_size.resize(spec.sizes.size());
    const auto errors = parallel_for(spec.sizes.size(), [&](std::size_t i) {
        const std::size_t size = spec.sizes[i];
        report.per_size[i] = evaluate_member(size, build_family_member(spec, size), spec.params.probe_index);
    });
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (errors[i])
            rethrow_annotated(spec.sizes[i], errors[i]);
    fill_fits(report);
    return report;
}

ScalingReport gabor_refinement_study(const PointSet2D& points,
                                     const std::vector<GaborDiscretization>& discretizations) {
    if (discretizations.empty())
        throw FamilySpecError("gabor_refinement_study: no discretizations");
    for (std::size_t i = 1; i < discretizations.size(); ++i)
        if (discretizations[i].samples_per_unit() <= discretizations[i - 1].samples_per_unit())
            throw FamilySpecError("gabor_refinement_study: samples per unit must increase");

    ScalingReport report;
    report.per_size.resize(discretizations.size());
    const auto errors = parallel_for(discretizations.size(), [&](std::size_t i) {
        const auto& disc = discretizations[i];
        const auto s = static_cast<std::size_t>(disc.samples_per_unit());
        // The probe is the grid sample at the left edge, far from every node.
        report.per_size[i] = evaluate_member(s, GeneratedPair{gaussian_gabor(points, disc), std::nullopt}, 0);
    });
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (errors[i]) {
            // TruncationError is the caller-facing failure here; keep its type.
            std::rethrow_exception(errors[i]);
        }
    fill_fits(report);
    return report;
}

} // namespace rieszlab
