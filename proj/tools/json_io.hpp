#pragma once

#include <string>

#include <json.hpp>

#include "gammalat/arithmetic.hpp"
#include "gammalat/diagram.hpp"
#include "gammalat/lattice.hpp"
#include "gammalat/primes.hpp"

namespace gammalat::io {

using Json = nlohmann::json;

/// Parses and validates a datum document. Unknown keys, wrong types and
/// failed ExtensionDatum checks all raise InvalidInput.
ExtensionDatum datum_from_json(const Json& doc);
Json datum_to_json(const ExtensionDatum& datum);

/// Report document: the report, an echo of the input and the tool version.
Json report_to_json(const ExtensionDatum& datum, const DecompositionReport& report);
DecompositionReport report_from_json(const Json& doc);

Json diagram_to_json(const YakovlevDiagram& d);
Json matrix_to_json(const IntMatrix& m);

Json density_to_json(const DensityReport& r);

/// Keys sorted, two-space indent, trailing newline.
std::string canonical_dump(const Json& doc);

}  // namespace gammalat::io
