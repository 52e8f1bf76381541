// Copyright 2026 The preventkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csv.hpp"

#include <ostream>
#include <istream>

#include "errors.hpp"

namespace pvk::csv {

std::string escape(std::string_view field) {
  bool needs_quotes = false;
  if (!field.empty() && (field.front() == ' ' || field.back() == ' ')) {
    needs_quotes = true;
  }
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, std::span<const std::string> fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(',');
    out << escape(fields[i]);
  }
  out.put('\n');
}

Reader::Reader(std::istream& in, bool skip_comments)
    : in_(in), skip_comments_(skip_comments) {}

bool Reader::next(std::vector<std::string>& fields) {
  fields.clear();
  int c = in_.get();
  // Skip empty lines and, when enabled, comment lines.
  while (c != EOF) {
    if (c == '\n') {
      ++line_;
      c = in_.get();
    } else if (c == '\r') {
      c = in_.get();
    } else if (skip_comments_ && c == '#') {
      while (c != EOF && c != '\n') c = in_.get();
    } else {
      break;
    }
  }
  if (c == EOF) return false;

  record_line_ = line_;
  std::string field;
  bool quoted = false;
  while (true) {
    if (quoted) {
      if (c == EOF) {
        throw ValidationError("line " + std::to_string(record_line_) +
                              ": unterminated quoted field");
      }
      if (c == '"') {
        const int d = in_.get();
        if (d == '"') {
          field.push_back('"');
        } else {
          quoted = false;
          c = d;
          continue;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(static_cast<char>(c));
      }
    } else {
      if (c == EOF || c == '\n') {
        if (c == '\n') ++line_;
        fields.push_back(std::move(field));
        return true;
      }
      if (c == '\r') {
        c = in_.get();
        continue;
      }
      if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
      } else if (c == '"' && field.empty()) {
        quoted = true;
      } else {
        field.push_back(static_cast<char>(c));
      }
    }
    c = in_.get();
  }
}

}  // namespace pvk::csv
