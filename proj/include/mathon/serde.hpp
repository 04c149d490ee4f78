#pragma once

#include "mathon/report.hpp"

#include <json.hpp>

#include <string>

// JSON and text rendering of the report types. JSON uses ordered maps so a
// fixed run serializes byte-identically; timings are opt-in because they are
// the one nondeterministic field.

namespace mathon {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int modulus = 3);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

/// A line set serializes as an array of basis matrices.
Json lineset_to_json(const LineSet& ls);

/// {"points": n, "lines": m, "incidence": [[p,l],...], "labels": optional}
Json incidence_to_json(const IncidenceStructure& inc);
IncidenceStructure incidence_from_json(const Json& j);

Json perp_report_to_json(const PerpSystemReport& r);

Json report_to_json(const PipelineReport& r, bool with_timings = false);
Json report_to_json(const StageReport& r, bool with_timings = false);
Json report_to_json(const PolarityReport& r, bool with_timings = false);

std::string report_to_text(const PipelineReport& r, bool with_timings = false);
std::string report_to_text(const StageReport& r, bool with_timings = false);
std::string report_to_text(const PolarityReport& r, bool with_timings = false);

} // namespace mathon
