#include "json_out.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace reactlin::cli {

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void newline(std::ostream& os, int indent, int depth) {
  if (indent < 0) return;
  os << '\n' << std::string(static_cast<std::size_t>(indent * depth), ' ');
}

void emit(std::ostream& os, const Json& j, int indent, int depth) {
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        newline(os, indent, depth + 1);
        os << Json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        emit(os, it.value(), indent, depth + 1);
      }
      newline(os, indent, depth);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // short numeric rows stay on one line: matrices, windows, points
      bool flat = j.size() <= 8;
      for (const auto& e : j) flat = flat && e.is_primitive();
      os << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << (flat ? ", " : ",");
        first = false;
        if (!flat) newline(os, indent, depth + 1);
        emit(os, e, indent, depth + 1);
      }
      if (!flat) newline(os, indent, depth);
      os << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_number(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace

void write_json(std::ostream& os, const Json& j, int indent) {
  emit(os, j, indent, 0);
  os << '\n';
}

std::string to_json_string(const Json& j, int indent) {
  std::ostringstream ss;
  write_json(ss, j, indent);
  return ss.str();
}

void write_csv_row(std::ostream& os, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << format_number(values[i]);
  }
  os << '\n';
}

void write_csv_header(std::ostream& os, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) os << ',';
    os << names[i];
  }
  os << '\n';
}

}  // namespace reactlin::cli
