#include "report.hpp"

namespace gop::cli {

namespace {

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const nlohmann::json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    if (v.empty()) out.emplace_back(prefix, "{}");
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (v.is_array()) {
    if (v.empty()) out.emplace_back(prefix, "[]");
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

void write_report(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      out << report.doc.dump(2) << "\n";
      return;
    case Format::csv: {
      if (report.table) {
        for (std::size_t i = 0; i < report.table->columns.size(); ++i)
          out << (i ? "," : "") << csv_field(report.table->columns[i]);
        out << "\n";
        for (const auto& row : report.table->rows) {
          for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
          out << "\n";
        }
        return;
      }
      std::vector<std::pair<std::string, std::string>> rows;
      flatten(report.doc, "", rows);
      out << "key,value\n";
      for (const auto& [k, v] : rows) out << csv_field(k) << "," << csv_field(v) << "\n";
      return;
    }
    case Format::text: {
      std::vector<std::pair<std::string, std::string>> rows;
      flatten(report.doc, "", rows);
      for (const auto& [k, v] : rows) {
        if (k == "schema") continue;
        out << k << ": " << v << "\n";
      }
      return;
    }
  }
}

}  // namespace gop::cli
