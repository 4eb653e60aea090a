// Copyright 2026 The Retro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "retro/report.hpp"

#include <cstdio>
#include <sstream>

namespace retro {

namespace {

std::string format_g(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string md_cell(const Cell& c) {
  std::string s = c.number ? format_g(*c.number, 10) : c.text;
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_row(std::ostringstream& out, const std::string& section, std::size_t row,
             const std::string& column, const std::string& value) {
  out << csv_field(section) << ',' << row << ',' << csv_field(column) << ',' << csv_field(value)
      << "\r\n";
}

}  // namespace

std::string format_sig12(double v) { return format_g(v, 12); }

std::string render_markdown(const Report& r) {
  std::ostringstream out;
  out << "# " << r.title << "\n\n";
  out << "| key | value |\n|---|---|\n";
  for (const auto& [k, v] : r.echo) out << "| " << md_cell(k) << " | " << md_cell(v) << " |\n";
  for (const auto& [table, text] : r.sections) {
    if (text) {
      out << "\n## " << text->name << "\n\n```\n" << text->text;
      if (!text->text.empty() && text->text.back() != '\n') out << '\n';
      out << "```\n";
      continue;
    }
    out << "\n## " << table.name << "\n\n";
    if (table.rows.empty()) {
      out << "(no rows)\n";
    } else {
      out << '|';
      for (const std::string& c : table.columns) out << ' ' << md_cell(c) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < table.columns.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& row : table.rows) {
        out << '|';
        for (const Cell& c : row) out << ' ' << md_cell(c) << " |";
        out << '\n';
      }
    }
    if (!table.note.empty()) out << '\n' << table.note << '\n';
  }
  if (!r.footnotes.empty()) {
    out << "\n## Notes\n\n";
    for (std::size_t i = 0; i < r.footnotes.size(); ++i) {
      out << i + 1 << ". " << r.footnotes[i] << '\n';
    }
  }
  return out.str();
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  out << "section,row,column,value\r\n";
  csv_row(out, "title", 1, "title", r.title);
  for (std::size_t i = 0; i < r.echo.size(); ++i) {
    csv_row(out, "echo", i + 1, r.echo[i].first, r.echo[i].second);
  }
  for (const auto& [table, text] : r.sections) {
    if (text) {
      std::istringstream lines(text->text);
      std::string line;
      std::size_t k = 0;
      while (std::getline(lines, line)) csv_row(out, text->name, ++k, "line", line);
      continue;
    }
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      for (std::size_t j = 0; j < table.rows[i].size() && j < table.columns.size(); ++j) {
        const Cell& c = table.rows[i][j];
        csv_row(out, table.name, i + 1, table.columns[j], c.number ? format_sig12(*c.number) : c.text);
      }
    }
    if (!table.note.empty()) csv_row(out, table.name, 0, "note", table.note);
  }
  for (std::size_t i = 0; i < r.footnotes.size(); ++i) {
    csv_row(out, "notes", i + 1, "text", r.footnotes[i]);
  }
  return out.str();
}

}  // namespace retro
