#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "jacobi/experiments.hpp"
#include "jacobi/hensel.hpp"
#include "jacobi/mechanisms.hpp"
#include "jacobi/monodromy.hpp"
#include "jacobi/pencil.hpp"

namespace jacobi::cli {

using nlohmann::json;

/// Parse JSON text. Syntax errors become ValidationError with line and
/// column taken from `source` (a file name used in the message).
json parse_text(std::string_view text, std::string_view source);

/// {"n", "a": [...], "b": [...], "label"?}. Entries are rational strings
/// ("3/7") or integers; floating literals are rejected. `text` is the
/// original document and is only used to point errors at a line.
JacobiPencil pencil_from_json(const json& doc, std::string_view text = {});
json to_json(const JacobiPencil& p);

/// {"form": "t"|"w", "coefficients": [[...], ...]}: coefficients[j][i]
/// multiplies lambda^i v^j, as rational strings.
json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const json& doc);
json to_json(const UniPoly& p);

json to_json(const Certificate& c);
json to_json(const MechanismReport& r);
json to_json(const Decision& d);
json to_json(const MonodromyReport& r);
json to_json(const SampleRecord& s, bool full);
json to_json(const CampaignReport& r);

}  // namespace jacobi::cli
