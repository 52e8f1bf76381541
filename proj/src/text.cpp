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

#include "text.hpp"

namespace pvk::text {

std::optional<size_t> utf8_invalid_offset(std::string_view s) {
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    size_t len;
    unsigned char min2 = 0x80;  // smallest valid second byte
    unsigned char max2 = 0xBF;  // largest valid second byte
    if (c < 0x80) {
      i += 1;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      if (c < 0xC2) return i;  // overlong two-byte form
      len = 2;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      if (c == 0xE0) min2 = 0xA0;        // no overlong
      if (c == 0xED) max2 = 0x9F;        // no surrogates
    } else if ((c & 0xF8) == 0xF0) {
      if (c > 0xF4) return i;            // beyond U+10FFFF
      len = 4;
      if (c == 0xF0) min2 = 0x90;
      if (c == 0xF4) max2 = 0x8F;
    } else {
      return i;
    }
    if (i + len > n) return i;
    const unsigned char b2 = static_cast<unsigned char>(s[i + 1]);
    if (b2 < min2 || b2 > max2) return i;
    for (size_t k = 2; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) return i;
    }
    i += len;
  }
  return std::nullopt;
}

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_word_byte(unsigned char c) {
  if (c >= 0x80) return true;
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string fold_ascii(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(ascii_lower(c));
  return out;
}

std::string normalize_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_ws = true;  // drops leading whitespace
  for (char c : s) {
    if (is_space(static_cast<unsigned char>(c))) {
      in_ws = true;
    } else {
      if (in_ws && !out.empty()) out.push_back(' ');
      in_ws = false;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> toks;
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (is_word_byte(c)) {
      size_t j = i + 1;
      while (j < n) {
        const unsigned char d = static_cast<unsigned char>(s[j]);
        if (is_word_byte(d)) {
          ++j;
        } else if (d == '\'' && j + 1 < n &&
                   is_word_byte(static_cast<unsigned char>(s[j + 1]))) {
          j += 2;  // interior apostrophe, as in "don't"
        } else {
          break;
        }
      }
      toks.push_back({fold_ascii(s.substr(i, j - i)), i, true});
      i = j;
    } else {
      toks.push_back({std::string(1, static_cast<char>(ascii_lower(s[i]))), i, false});
      ++i;
    }
  }
  return toks;
}

}  // namespace pvk::text
