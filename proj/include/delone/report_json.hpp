#pragma once

// JSON report serialization.  All numeric values are rounded to 12
// significant digits before insertion so the emitted text is stable.

#include <nlohmann/json.hpp>

#include "delone/almost_period.hpp"
#include "delone/dynamics.hpp"
#include "delone/sources.hpp"

namespace delone {

using json = nlohmann::ordered_json;

double round_sig(double v, int digits = 12);
json num(double v);                  // 12-significant-digit value
json points_json(const PointSet& ps);

json report_json(const DeloneCheckReport& r);
json report_json(const FlcCensus& r);
json periods_report_json(const PointSet& periods, const Ball& window, double tol);
json report_json(const ReturnVectorReport& r);
json report_json(const EpsPeriodReport& r);
json report_json(const BijectionWitness& r);
json report_json(const BohrReport& r);
json report_json(const UapReport& r);
json report_json(const ProximalityReport& r);
json report_json(const SeparatingAnchor& r);
json report_json(const ForcingReport& r);

}  // namespace delone
