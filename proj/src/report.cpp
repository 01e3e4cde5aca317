#include "rieszlab/report.hpp"

#include "rieszlab/csv_io.hpp"
#include "rieszlab/duals.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace rieszlab {

namespace {

json optional_number(const std::optional<double>& x) {
    return x ? number_or_null(*x) : json(nullptr);
}

json optional_verdict(const std::optional<VerdictKind>& v) {
    return v ? json(std::string(to_string(*v))) : json(nullptr);
}

} // namespace

json number_or_null(double x) {
    return std::isfinite(x) ? json(x) : json(nullptr);
}

json tolerances_json() {
    return json{
        {"rankTolFactor", kRankTolFactor},
        {"routeAgreement", kRouteAgreementTol},
        {"gramResolutionFactor", kGramResolutionFactor},
        {"biorthogonality", kBiorthogonalityTol},
        {"zeroFloor", kZeroFloor},
        {"exponentBand", kExponentBand},
        {"minR2", kMinR2},
        {"boundedBelowFloor", kBoundedBelowFloor},
    };
}

json analysis_report(const VectorSequence& f, const json& input) {
    const Verdict v = classify(f);
    const GramSpectrum gs = gram_spectrum(f);

    json residuals = {{"biorthogonality", nullptr}, {"dualityIdentity", nullptr}};
    if (v.kind != VerdictKind::LinearlyDependent) {
        try {
            const VectorSequence g = minimal_dual(f);
            residuals["biorthogonality"] = number_or_null(biorthogonality_residual(f, g));
            residuals["dualityIdentity"] = number_or_null(duality_identity_residual(f, g));
        } catch (const IllConditionedError&) {
        }
    }

    json out;
    out["schemaVersion"] = kSchemaVersion;
    out["input"] = input;
    out["dim"] = f.dim();
    out["count"] = f.count();
    out["bounds"] = {{"rieszLower", number_or_null(v.report.riesz_lower)},
                     {"besselUpper", number_or_null(v.report.bessel_upper)}};
    out["conditioning"] = number_or_null(v.report.conditioning);
    out["defect"] = v.report.completeness_defect;
    out["gramSpectrum"] = {{"lambdaMin", number_or_null(gs.lambda_min)},
                           {"lambdaMax", number_or_null(gs.lambda_max)},
                           {"bijective", gs.bijective}};
    out["residuals"] = residuals;
    out["verdict"] = std::string(to_string(v.kind));
    out["routes"] = {{"synthesis", std::string(to_string(v.routes.synthesis_route))},
                     {"gram", optional_verdict(v.routes.gram_route)},
                     {"dual", optional_verdict(v.routes.dual_route)}};
    out["tolerances"] = tolerances_json();
    out["tolerances"]["rankTolerance"] = number_or_null(rank_tolerance(f));
    return out;
}

json scaling_report_json(const ScalingReport& report) {
    json per_size = json::array();
    for (const auto& m : report.per_size) {
        per_size.push_back({
            {"size", m.size},
            {metric::kRieszLowerF, number_or_null(m.riesz_lower_f)},
            {metric::kBesselUpperF, number_or_null(m.bessel_upper_f)},
            {metric::kDefectDistanceF, optional_number(m.defect_distance_f)},
            {metric::kBesselUpperDual, optional_number(m.bessel_upper_dual)},
            {metric::kDualityResidual, optional_number(m.duality_residual)},
        });
    }
    json fits = json::object();
    for (const auto& [name, fit] : report.fits)
        fits[name] = {{"exponent", number_or_null(fit.exponent)},
                      {"r2", number_or_null(fit.r_squared)},
                      {"identicallyZero", fit.identically_zero}};
    json verdicts = json::object();
    for (const auto& [name, verdict] : report.verdicts)
        verdicts[name] = std::string(to_string(verdict));
    return json{{"perSize", per_size}, {"fits", fits}, {"verdicts", verdicts}};
}

std::string scaling_report_csv(const ScalingReport& report) {
    std::ostringstream out;
    auto cell = [&](const std::optional<double>& x) {
        out << ',';
        if (x)
            out << format_real(*x);
    };
    out << "size," << metric::kRieszLowerF << ',' << metric::kBesselUpperF << ',' << metric::kDefectDistanceF << ','
        << metric::kBesselUpperDual << ',' << metric::kDualityResidual << '\n';
    for (const auto& m : report.per_size) {
        out << m.size;
        cell(m.riesz_lower_f);
        cell(m.bessel_upper_f);
        cell(m.defect_distance_f);
        cell(m.bessel_upper_dual);
        cell(m.duality_residual);
        out << '\n';
    }
    return out.str();
}

} // namespace rieszlab
