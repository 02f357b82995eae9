#pragma once

#include <string>

#include "specladder/ladder.hpp"
#include "specladder/models.hpp"
#include "specladder/oracle.hpp"

namespace specladder {

enum class OutputFormat { Table, Json, Csv };

// Parses "table", "json" or "csv"; anything else throws InvalidParameter.
OutputFormat parse_format(const std::string& name);

// Spectrum rendering. JSON uses the stable schema
//   {"model": ..., "units": ..., "params": {...}, "levels": [{<labels>, "energy": ...}]}
// with keys in insertion order; CSV prints one header row of label names plus
// "energy", values with 12 significant digits and '.' as the decimal mark.
std::string render_spectrum(const ModelSpectrum& spectrum, OutputFormat format);

// Report rendering; the JSON schema is
//   {"model", "unit", "grid", "tol_abs", "tol_rel", "pass", "levels": [...], "warnings": [...]}.
std::string render_report(const OracleReport& report, OutputFormat format);

// Inverse of render_spectrum/render_report for the JSON format; both throw
// InvalidParameter on malformed documents. Round trip is exact: every double
// survives unchanged.
ModelSpectrum parse_spectrum_json(const std::string& text);
OracleReport parse_report_json(const std::string& text);

// Input for the consistency checker: either an explicit pair
//   {"s": [...], "a": [...], "finite": false}
// or a coefficient list {"coeffs": [...], "finite": false} whose entries are
// real numbers or [re, im] pairs. Exactly one of the two is present.
struct ConsistencyInput {
    bool has_pair = false;
    SpectrumPair pair;
    LadderSpec spec;
};

ConsistencyInput parse_consistency_input(const std::string& text);

}  // namespace specladder
