// Copyright 2026 The phicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "phicx/io.hpp"

namespace phicx {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { Human, Json, Csv };

/// A named value with its unit and the identifier of the formula behind it.
struct ReportEntry {
  std::string name;
  std::variant<double, std::string> value;
  std::string unit;
  std::string formula;
};

struct ReportTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct Report {
  std::string subcommand;
  std::vector<ReportEntry> inputs = {};
  std::vector<ReportEntry> results = {};
  std::vector<std::string> warnings = {};
  std::optional<ReportTable> table = {};

  Report& input(std::string name, double v, std::string unit) {
    inputs.push_back({std::move(name), v + 0.0, std::move(unit), {}});  // -0 prints as 0
    return *this;
  }
  Report& input(std::string name, std::string v) {
    inputs.push_back({std::move(name), std::move(v), {}, {}});
    return *this;
  }
  Report& result(std::string name, double v, std::string unit, std::string formula) {
    results.push_back({std::move(name), v + 0.0, std::move(unit), std::move(formula)});
    return *this;
  }
  Report& result(std::string name, std::string v, std::string formula) {
    results.push_back({std::move(name), std::move(v), {}, std::move(formula)});
    return *this;
  }

  const ReportEntry* find(const std::string& name) const {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }
};

namespace detail {
inline io::json entry_json(const ReportEntry& e, bool with_formula) {
  io::json j;
  std::visit([&](const auto& v) { j["value"] = v; }, e.value);
  if (!e.unit.empty()) j["unit"] = e.unit;
  if (with_formula) j["formula"] = e.formula;
  return j;
}

inline std::string human_value(const ReportEntry& e) {
  if (const auto* s = std::get_if<std::string>(&e.value)) return *s;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", std::get<double>(e.value));
  return e.unit.empty() ? std::string(buf) : std::string(buf) + " " + e.unit;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

inline io::json report_to_json(const Report& r) {
  io::json j;
  j["tool"] = "phicx";
  j["version"] = kVersion;
  j["subcommand"] = r.subcommand;
  j["inputs"] = io::json::object();
  for (const auto& e : r.inputs) j["inputs"][e.name] = detail::entry_json(e, false);
  j["results"] = io::json::object();
  for (const auto& e : r.results) j["results"][e.name] = detail::entry_json(e, true);
  j["warnings"] = r.warnings;
  if (r.table) {
    io::json rows = io::json::array();
    for (const auto& row : r.table->rows) rows.push_back(row);
    j["table"] = {{"columns", r.table->columns}, {"rows", std::move(rows)}};
  }
  return j;
}

inline void render_report(std::ostream& os, const Report& r, Format f) {
  switch (f) {
    case Format::Json:
      os << io::render_canonical(report_to_json(r)) << "\n";
      return;
    case Format::Csv:
      if (r.table) {
        for (std::size_t i = 0; i < r.table->columns.size(); ++i)
          os << (i ? "," : "") << r.table->columns[i];
        os << "\n";
        for (const auto& row : r.table->rows) {
          for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << io::format_number(row[i]);
          os << "\n";
        }
        return;
      }
      os << "section,name,value,unit,formula\n";
      for (const auto* section : {&r.inputs, &r.results}) {
        const char* tag = section == &r.inputs ? "input" : "result";
        for (const auto& e : *section) {
          std::string v;
          if (const auto* s = std::get_if<std::string>(&e.value)) v = detail::csv_field(*s);
          else v = io::format_number(std::get<double>(e.value));
          os << tag << "," << detail::csv_field(e.name) << "," << v << "," << detail::csv_field(e.unit)
             << "," << detail::csv_field(e.formula) << "\n";
        }
      }
      for (const auto& w : r.warnings) os << "warning,," << detail::csv_field(w) << ",,\n";
      return;
    case Format::Human: {
      os << "phicx " << r.subcommand << "\n";
      auto block = [&](const char* title, const std::vector<ReportEntry>& entries, bool formulas) {
        if (entries.empty()) return;
        os << "  " << title << ":\n";
        for (const auto& e : entries) {
          std::string name = e.name;
          if (name.size() < 26) name.append(26 - name.size(), ' ');
          std::string line = "    " + name + " " + detail::human_value(e);
          if (formulas && !e.formula.empty()) {
            if (line.size() < 64) line.append(64 - line.size(), ' ');
            line += "  [" + e.formula + "]";
          }
          os << line << "\n";
        }
      };
      block("inputs", r.inputs, false);
      block("results", r.results, true);
      if (r.table) {
        os << "  table:\n    ";
        for (const auto& c : r.table->columns) {
          os << c << std::string(c.size() < 24 ? 24 - c.size() : 1, ' ');
        }
        os << "\n";
        for (const auto& row : r.table->rows) {
          os << "    ";
          for (double v : row) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%-24.10g", v);
            os << buf;
          }
          os << "\n";
        }
      }
      for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
      return;
    }
  }
}

}  // namespace phicx
