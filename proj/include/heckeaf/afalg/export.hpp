#pragma once

#include "heckeaf/afalg/af.hpp"

#include <string>
#include <string_view>

namespace heckeaf {

enum class ExportFormat { Dot, Json };

/// Throws ParseError for anything other than "dot" or "json".
ExportFormat parse_export_format(std::string_view s);

/// DOT draws each level as a rank of vertices joined by b_rs parallel edges;
/// stationary diagrams are unrolled to `levels` levels and annotated with
/// their period. JSON keeps every integer as a string.
std::string export_bratteli(const AFDescriptor& d, ExportFormat format, std::size_t levels = 5);

/// Inverse of the JSON export. Throws SchemaError.
AFDescriptor import_bratteli_json(std::string_view text);

}  // namespace heckeaf
