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

#ifndef PVK_TEXT_HPP
#define PVK_TEXT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pvk::text {

// Byte offset of the first invalid UTF-8 sequence, or nullopt when the
// whole buffer decodes.
std::optional<size_t> utf8_invalid_offset(std::string_view s);

bool is_space(unsigned char c);

// Word bytes are ASCII alphanumerics plus any non-ASCII byte; the
// apostrophe joins word tokens ("don't") but does not count as a word
// byte at match boundaries.
bool is_word_byte(unsigned char c);

char ascii_lower(char c);
std::string fold_ascii(std::string_view s);

// Collapse whitespace runs to single spaces and trim both ends.
std::string normalize_ws(std::string_view s);

struct Token {
  std::string lower;  // folded text; single punctuation char for marks
  size_t pos = 0;     // byte offset into the tokenized string
  bool word = false;
};

// Word tokens are maximal runs of word bytes and interior apostrophes;
// every other non-space byte becomes a one-char punctuation token.
std::vector<Token> tokenize(std::string_view s);

}  // namespace pvk::text

#endif  // PVK_TEXT_HPP
