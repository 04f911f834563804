#pragma once

#include "concom/concomitants.hpp"
#include "concom/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace concom {

using Json = nlohmann::ordered_json;

// Accepts {"E": [[re,im] x3], "B": [[re,im] x3]} or {"matrix": 4x4 of [re,im]}.
// The rational backend takes integers or "p/q" strings for each part; the float
// backend additionally takes plain numbers. A matrix that is not antisymmetric
// raises antisymmetry_error; every other malformation raises invalid_argument.
template <class S>
Bivector<S> bivector_from_json(const Json& doc);

// The optional "backend" field ("rational" or "float") of a bivector document.
std::optional<std::string> backend_hint_from_json(const Json& doc);

// Serializes the selected members. Valid names: Lplus, Lminus, T2, Q2, D2irr,
// X2irr, Tprime, Qprime, Dprime, Xprime, D4irr, X4irr; an empty selection means
// everything. Exact values serialize as "p/q" strings, float values as numbers.
template <class S>
Json concomitant_document(const ConcomitantSet<S>& set, const std::vector<std::string>& selection);

Json report_to_json(const PropertyReport& report);

// Canonical on-disk rendering (2-space indent, trailing newline); reusing it on a
// re-parsed document is what makes round-trips byte-identical.
std::string dump_document(const Json& doc);

}  // namespace concom
