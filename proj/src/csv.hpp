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

#ifndef PVK_CSV_HPP
#define PVK_CSV_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pvk::csv {

// Quotes the field when it contains a comma, quote, newline or leading/
// trailing blank.
std::string escape(std::string_view field);

void write_row(std::ostream& out, std::span<const std::string> fields);

// RFC-4180-ish reader: quoted fields may contain commas, newlines and
// doubled quotes.  With skip_comments, records whose first byte is '#'
// are dropped.
class Reader {
 public:
  explicit Reader(std::istream& in, bool skip_comments = false);

  // Reads one record; false at end of input.  Throws ValidationError on
  // an unterminated quoted field.
  bool next(std::vector<std::string>& fields);

  // 1-based line number where the last record started.
  size_t line() const { return record_line_; }

 private:
  std::istream& in_;
  bool skip_comments_;
  size_t line_ = 1;
  size_t record_line_ = 0;
};

}  // namespace pvk::csv

#endif  // PVK_CSV_HPP
