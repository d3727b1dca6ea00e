#pragma once

#include <string>
#include <string_view>

#include "mbmod/table.hpp"

namespace mbmod {

/// Version stamp written into every instance file.
inline constexpr int instance_format_version = 1;

/// Canonical structured-text form: UTF-8 JSON, keys sorted, two-space
/// indent, trailing newline, entries sorted by (i, j), coefficients in
/// canonical text form.  parse_instance(serialize_instance(t)) == t, and
/// the bytes themselves are a pure function of the table.
std::string serialize_instance(const ActionTable& t);

/// Strict parser: unknown keys, missing required keys, wrong JSON types,
/// malformed coefficients, and out-of-range numbers are all ParseError /
/// IndexOutOfRange; the assembled data then passes through build_table,
/// so every table this returns is valid.
ActionTable parse_instance(std::string_view text);

ActionTable load_instance(const std::string& path); // IoError on unreadable file
void save_instance(const std::string& path, const ActionTable& t); // IoError

/// CLI argument to index: resolves labels first, then decimal ids, so a
/// label that happens to spell a numeral wins.  IndexOutOfRange otherwise.
Index resolve_v_index(const ActionTable& t, std::string_view token);
Index resolve_w_index(const ActionTable& t, std::string_view token);

} // namespace mbmod
