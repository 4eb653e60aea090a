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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace retro {

/// A table cell: text, or a number rendered per output format.
struct Cell {
  std::string text;
  std::optional<double> number;

  Cell(const char* s) : text(s) {}
  Cell(std::string s) : text(std::move(s)) {}
  Cell(double v) : number(v) {}
  Cell(int v) : text(std::to_string(v)) {}
  Cell(long v) : text(std::to_string(v)) {}
  Cell(long long v) : text(std::to_string(v)) {}
  Cell(unsigned v) : text(std::to_string(v)) {}
  Cell(unsigned long v) : text(std::to_string(v)) {}
  Cell(unsigned long long v) : text(std::to_string(v)) {}
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::string note;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

/// Verbatim lines, e.g. a state dump.
struct TextBlock {
  std::string name;
  std::string text;
};

struct Report {
  std::string title;
  std::vector<std::pair<std::string, std::string>> echo;
  // Tables and text blocks in output order.
  std::vector<std::pair<Table, std::optional<TextBlock>>> sections;
  std::vector<std::string> footnotes;

  void add_table(Table t) { sections.emplace_back(std::move(t), std::nullopt); }
  void add_text(std::string name, std::string text) {
    sections.emplace_back(Table{}, TextBlock{std::move(name), std::move(text)});
  }
};

/// %.12g with "-0" folded into "0".
std::string format_sig12(double v);

std::string render_markdown(const Report& r);
/// RFC 4180 long table with header `section,row,column,value`.
std::string render_csv(const Report& r);

}  // namespace retro
