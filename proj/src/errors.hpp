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

#ifndef PVK_ERRORS_HPP
#define PVK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pvk {

enum class ErrorKind {
  Argument,   // bad argument / violated precondition
  Validation, // malformed input data
  Data,       // semantically inconsistent data
  Parse,      // unparseable structured file
  Decoding,   // invalid text encoding
  Io,         // file system failure
  Degenerate, // statistic undefined on this input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct ArgumentError : Error {
  explicit ArgumentError(const std::string& m) : Error(ErrorKind::Argument, m) {}
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& m) : Error(ErrorKind::Validation, m) {}
};
struct DataError : Error {
  explicit DataError(const std::string& m) : Error(ErrorKind::Data, m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorKind::Parse, m) {}
};
struct DecodingError : Error {
  explicit DecodingError(const std::string& m) : Error(ErrorKind::Decoding, m) {}
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorKind::Io, m) {}
};
struct DegenerateError : Error {
  explicit DegenerateError(const std::string& m) : Error(ErrorKind::Degenerate, m) {}
};

}  // namespace pvk

#endif  // PVK_ERRORS_HPP
