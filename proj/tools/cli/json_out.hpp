#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace reactlin::cli {

using Json = nlohmann::ordered_json;

/// 17 significant digits, C locale; NaN and infinities become "null".
std::string format_number(double v);

/// Pretty printer that keeps key order and formats every float through
/// format_number, so reports are byte-stable across runs.
void write_json(std::ostream& os, const Json& j, int indent = 2);
std::string to_json_string(const Json& j, int indent = 2);

/// One CSV line, '\n' terminated. Numbers via format_number.
void write_csv_row(std::ostream& os, const std::vector<double>& values);
void write_csv_header(std::ostream& os, const std::vector<std::string>& names);

}  // namespace reactlin::cli
