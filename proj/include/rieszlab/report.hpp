#pragma once

// JSON / CSV report builders shared by the command-line front end.
// Report layout is versioned by kSchemaVersion; absent quantities are null,
// never NaN or infinity.

#include "rieszlab/diagnostics.hpp"
#include "rieszlab/scaling.hpp"

#include <json.hpp>

#include <string>

namespace rieszlab {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

/// Tolerance constants in effect, so reports are self-describing.
json tolerances_json();

/// Bounds, defect, Gram spectrum, verdict and (when a minimal dual exists)
/// biorthogonality / duality-identity residuals of one system.
json analysis_report(const VectorSequence& f, const json& input);

json scaling_report_json(const ScalingReport& report);

/// One row per size: size,rieszLowerF,besselUpperF,defectDistanceF,besselUpperDual,dualityResidual.
std::string scaling_report_csv(const ScalingReport& report);

/// Finite doubles as numbers, everything else as null.
json number_or_null(double x);

} // namespace rieszlab
