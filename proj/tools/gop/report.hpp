#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace gop::cli {

enum class Format { json, csv, text };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// A command result: a JSON document (keys sorted on output) and, for
// trajectory-like results, the table written in CSV mode.
struct Report {
  nlohmann::json doc = nlohmann::json::object();
  std::optional<Table> table;
};

void write_report(const Report& report, Format format, std::ostream& out);

}  // namespace gop::cli
