#pragma once

// JSON serialization of transfer functions and ladders.
//
// TfDocument layout:
//   {"meta": {...}, "variable": "s", "num": ["64", "112", ...], "den": [...],
//    "gain": {"label": "Kp^1/2", "value": 1.41}}
// Coefficients are listed from the highest power down. Numeric documents use
// exact "p/q" strings; symbolic ones use polynomial strings.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fracreal/approx.hpp"
#include "fracreal/ladder.hpp"

namespace fracreal {

struct TfDocument {
    std::string variable = "s";
    std::vector<std::string> num;  // descending powers
    std::vector<std::string> den;
    std::optional<GainTag> gain;
    nlohmann::ordered_json meta;  // null when absent

    friend bool operator==(const TfDocument&, const TfDocument&) = default;
};

struct EmitOptions {
    /// Decimal strings with 15 significant digits instead of exact rationals.
    bool float_coefficients = false;
    bool include_meta = true;
};

TfDocument to_document(const RatTf& tf, nlohmann::ordered_json meta = nullptr,
                       const EmitOptions& options = {});
TfDocument to_document(const SymTf& tf, nlohmann::ordered_json meta = nullptr);

/// Coefficient strings may be "p", "p/q" or decimals (read exactly).
RatTf to_rational_tf(const TfDocument& doc);
SymTf to_symbolic_tf(const TfDocument& doc);

nlohmann::ordered_json to_json(const TfDocument& doc, bool include_meta = true);
TfDocument document_from_json(const nlohmann::ordered_json& j);

/// Pretty-printed JSON with a trailing newline.
std::string emit(const TfDocument& doc, bool include_meta = true);
/// Throws ValidationError on malformed input.
TfDocument parse_document(std::string_view text);

nlohmann::ordered_json ladder_to_json(const LadderNetwork& net, const std::vector<CircuitElement>& parts);

std::string format_double(double v);

}  // namespace fracreal
