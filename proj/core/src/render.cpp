#include "specladder/render.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "specladder/errors.hpp"

namespace specladder {

using ordered_json = nlohmann::ordered_json;

namespace {

// 12 significant digits, locale independent; to_chars never emits ',' as a
// decimal mark.
std::string fmt_sig(double v) {
    std::array<char, 40> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                             std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) row += ',';
        row += cells[i];
    }
    row += '\n';
    return row;
}

std::string table_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += "  ";
            out.append(width[c] - row[c].size(), ' ');
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

double require_number(const ordered_json& v, const char* where) {
    if (!v.is_number())
        throw InvalidParameter(std::string(where) + " must be a number");
    return v.get<double>();
}

ordered_json parse_document(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw InvalidParameter("malformed JSON input");
    return doc;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw InvalidParameter("unknown output format '" + name +
                           "' (expected table, json or csv)");
}

std::string render_spectrum(const ModelSpectrum& spectrum, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json doc;
        doc["model"] = spectrum.model_name;
        doc["units"] = spectrum.unit;
        ordered_json params = ordered_json::object();
        for (const auto& [key, value] : spectrum.params) params[key] = value;
        doc["params"] = params;
        ordered_json levels = ordered_json::array();
        for (const auto& level : spectrum.levels) {
            ordered_json entry = ordered_json::object();
            for (const auto& [key, value] : level.labels) entry[key] = value;
            entry["energy"] = level.energy;
            levels.push_back(entry);
        }
        doc["levels"] = levels;
        return doc.dump(2) + "\n";
    }

    std::vector<std::string> header;
    if (!spectrum.levels.empty())
        for (const auto& [key, value] : spectrum.levels.front().labels)
            header.push_back(key);
    header.push_back("energy");

    std::vector<std::vector<std::string>> rows;
    rows.push_back(header);
    for (const auto& level : spectrum.levels) {
        std::vector<std::string> row;
        for (const auto& [key, value] : level.labels) row.push_back(fmt_sig(value));
        row.push_back(fmt_sig(level.energy));
        rows.push_back(row);
    }

    if (format == OutputFormat::Csv) {
        std::string out;
        for (const auto& row : rows) out += csv_row(row);
        return out;
    }

    std::string out = "model: " + spectrum.model_name + "   units: " + spectrum.unit + "\n";
    if (!spectrum.params.empty()) {
        out += "params:";
        for (const auto& [key, value] : spectrum.params)
            out += " " + key + "=" + fmt_sig(value);
        out += "\n";
    }
    out += table_rows(rows);
    return out;
}

std::string render_report(const OracleReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json doc;
        doc["model"] = report.model_name;
        doc["unit"] = report.unit;
        doc["grid"] = report.grid_info;
        doc["tol_abs"] = report.tol_abs;
        doc["tol_rel"] = report.tol_rel;
        doc["pass"] = report.pass;
        ordered_json levels = ordered_json::array();
        for (std::size_t k = 0; k < report.algebraic.size(); ++k) {
            ordered_json entry = ordered_json::object();
            entry["algebraic"] = report.algebraic[k];
            entry["numeric"] = report.numeric[k];
            entry["abs_err"] = report.abs_err[k];
            // Infinite relative error (exact zero reference) maps to null.
            double rel = report.rel_err[k];
            if (std::isfinite(rel))
                entry["rel_err"] = rel;
            else
                entry["rel_err"] = nullptr;
            levels.push_back(entry);
        }
        doc["levels"] = levels;
        doc["warnings"] = report.warnings;
        return doc.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"k", "algebraic", "numeric", "abs_err", "rel_err"});
    for (std::size_t k = 0; k < report.algebraic.size(); ++k)
        rows.push_back({std::to_string(k), fmt_sig(report.algebraic[k]),
                        fmt_sig(report.numeric[k]), fmt_sig(report.abs_err[k]),
                        fmt_sig(report.rel_err[k])});

    if (format == OutputFormat::Csv) {
        std::string out;
        for (const auto& row : rows) out += csv_row(row);
        return out;
    }

    std::string out = "model: " + report.model_name + "   unit: " + report.unit + "\n";
    if (!report.grid_info.empty()) out += "grid: " + report.grid_info + "\n";
    out += "tolerance: abs=" + fmt_sig(report.tol_abs) +
           " rel=" + fmt_sig(report.tol_rel) + "\n";
    out += table_rows(rows);
    out += std::string("result: ") + (report.pass ? "PASS" : "FAIL") + "\n";
    for (const auto& warning : report.warnings) out += "warning: " + warning + "\n";
    return out;
}

ModelSpectrum parse_spectrum_json(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("model") || !doc.contains("levels"))
        throw InvalidParameter("spectrum JSON needs 'model' and 'levels'");

    ModelSpectrum spectrum;
    spectrum.model_name = doc["model"].get<std::string>();
    if (doc.contains("units")) spectrum.unit = doc["units"].get<std::string>();
    if (doc.contains("params")) {
        if (!doc["params"].is_object())
            throw InvalidParameter("'params' must be an object");
        for (const auto& [key, value] : doc["params"].items())
            spectrum.params.emplace_back(key, require_number(value, "param"));
    }
    if (!doc["levels"].is_array())
        throw InvalidParameter("'levels' must be an array");
    for (const auto& entry : doc["levels"]) {
        if (!entry.is_object() || !entry.contains("energy"))
            throw InvalidParameter("each level needs an 'energy' field");
        Level level;
        for (const auto& [key, value] : entry.items()) {
            if (key == "energy")
                level.energy = require_number(value, "energy");
            else
                level.labels.emplace_back(key, require_number(value, "label"));
        }
        spectrum.levels.push_back(std::move(level));
    }
    return spectrum;
}

OracleReport parse_report_json(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("levels"))
        throw InvalidParameter("report JSON needs a 'levels' array");

    OracleReport report;
    if (doc.contains("model")) report.model_name = doc["model"].get<std::string>();
    if (doc.contains("unit")) report.unit = doc["unit"].get<std::string>();
    if (doc.contains("grid")) report.grid_info = doc["grid"].get<std::string>();
    if (doc.contains("tol_abs")) report.tol_abs = require_number(doc["tol_abs"], "tol_abs");
    if (doc.contains("tol_rel")) report.tol_rel = require_number(doc["tol_rel"], "tol_rel");
    if (doc.contains("pass")) report.pass = doc["pass"].get<bool>();
    if (!doc["levels"].is_array())
        throw InvalidParameter("'levels' must be an array");
    for (const auto& entry : doc["levels"]) {
        if (!entry.is_object() || !entry.contains("algebraic") || !entry.contains("numeric") ||
            !entry.contains("abs_err") || !entry.contains("rel_err"))
            throw InvalidParameter(
                "each report level needs algebraic, numeric, abs_err and rel_err");
        report.algebraic.push_back(require_number(entry["algebraic"], "algebraic"));
        report.numeric.push_back(require_number(entry["numeric"], "numeric"));
        report.abs_err.push_back(require_number(entry["abs_err"], "abs_err"));
        const auto& rel = entry["rel_err"];
        report.rel_err.push_back(rel.is_null()
                                     ? std::numeric_limits<double>::infinity()
                                     : require_number(rel, "rel_err"));
    }
    if (doc.contains("warnings"))
        for (const auto& warning : doc["warnings"])
            report.warnings.push_back(warning.get<std::string>());
    return report;
}

ConsistencyInput parse_consistency_input(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object())
        throw InvalidParameter("consistency input must be a JSON object");

    const bool has_pair = doc.contains("s") || doc.contains("a");
    const bool has_coeffs = doc.contains("coeffs");
    if (has_pair == has_coeffs)
        throw InvalidParameter(
            "consistency input needs either 's' and 'a' arrays or a 'coeffs' array");

    ConsistencyInput input;
    bool finite = false;
    if (doc.contains("finite")) {
        if (!doc["finite"].is_boolean())
            throw InvalidParameter("'finite' must be a boolean");
        finite = doc["finite"].get<bool>();
    }

    if (has_pair) {
        if (!doc.contains("s") || !doc.contains("a"))
            throw InvalidParameter("spectrum input needs both 's' and 'a'");
        if (!doc["s"].is_array() || !doc["a"].is_array())
            throw InvalidParameter("'s' and 'a' must be arrays");
        input.has_pair = true;
        for (const auto& v : doc["s"]) input.pair.s.push_back(require_number(v, "s"));
        for (const auto& v : doc["a"]) input.pair.a.push_back(require_number(v, "a"));
        if (input.pair.s.size() != input.pair.a.size())
            throw DimensionError("'s' and 'a' must have the same length");
        input.pair.finite = finite;
        return input;
    }

    if (!doc["coeffs"].is_array())
        throw InvalidParameter("'coeffs' must be an array");
    for (const auto& v : doc["coeffs"]) {
        if (v.is_number()) {
            input.spec.coeffs.emplace_back(v.get<double>(), 0.0);
        } else if (v.is_array() && v.size() == 2) {
            input.spec.coeffs.emplace_back(require_number(v[0], "coeff re"),
                                           require_number(v[1], "coeff im"));
        } else {
            throw InvalidParameter(
                "each coefficient is a real number or a [re, im] pair");
        }
    }
    input.spec.finite = finite;
    return input;
}

}  // namespace specladder
