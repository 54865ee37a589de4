#pragma once

// JSON and CSV serialisation of bound reports, qc results, sweep specs and
// certificates. Every JSON object carries "schema": "hyplam-report-v1".
// Non-finite reals are written as the strings "inf", "-inf" and "nan".

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyplam/lambert.hpp"
#include "hyplam/qcbounds.hpp"
#include "hyplam/verify.hpp"

namespace hyplam::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "hyplam-report-v1";

Json to_json(const lambert::BoundReport& r);
Json to_json(const qcbounds::QcBoundResult& r);
Json to_json(const verify::SweepSpec& s);
Json to_json(const verify::Certificate& c);
Json to_json(const std::vector<verify::Certificate>& cs);

// The parsers throw FormatError on missing fields, wrong types or a foreign
// schema string.
lambert::BoundReport bound_report_from_json(const Json& j);
qcbounds::QcBoundResult qc_result_from_json(const Json& j);
verify::SweepSpec sweep_spec_from_json(const Json& j);
verify::Certificate certificate_from_json(const Json& j);
std::vector<verify::Certificate> certificates_from_json(const Json& j);

/// Shortest of %.17g: 17 significant digits, '.' decimal point regardless
/// of locale, "inf"/"-inf"/"nan" for non-finite values.
std::string format_real(double x);

void write_csv(std::ostream& out, const verify::SweepTable& table);

}  // namespace hyplam::io
