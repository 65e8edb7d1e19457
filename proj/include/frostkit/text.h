// Copyright 2026 The FrostKit Authors.
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

#ifndef FROSTKIT_TEXT_H_
#define FROSTKIT_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace frostkit {

// Character classes. Letters are ASCII letters plus the Latin-1 Supplement
// and Latin Extended-A/B blocks (U+00C0..U+024F, minus the two math signs).
// Everything else outside ASCII alphanumerics is punctuation.
bool IsAsciiSpace(char c);
bool IsAsciiDigit(char c);
bool IsLetter(char32_t cp);
bool IsUpperLetter(char32_t cp);
char32_t ToLowerLetter(char32_t cp);

// Decodes one UTF-8 code point starting at `pos`. Invalid or truncated
// sequences decode as U+FFFD with length 1. Returns the byte length.
size_t DecodeUtf8(std::string_view text, size_t pos, char32_t *cp);
void AppendUtf8(char32_t cp, std::string *out);

// Case folding over the letter classes above; other bytes pass through.
std::string FoldCase(std::string_view text);

// True if the first code point of `word` is an upper-case letter.
bool StartsUpper(std::string_view word);

std::string_view Trim(std::string_view text);
std::vector<std::string_view> SplitWhitespace(std::string_view text);

// Annotation tokens. The tokenizer is the shared basis for entity
// detection and for entity/document matching:
//
//   acronym   (?:[A-Z]\.){2,}                     "U.S.", "U.K."
//   ordinal   \d+(?:st|nd|rd|th) not followed by a letter
//   number    \d+(?:,\d{3}(?!\d))*(?:\.\d+)?
//   word      L+(?:'L+)*, where an apostrophe followed by a lone s/S
//             (possessive) is not joined
//   punct     any other single non-space code point
struct Token {
  enum class Type { kWord, kAcronym, kNumber, kOrdinal, kPunct };

  Type type;
  size_t begin;
  size_t end;

  std::string_view View(std::string_view text) const {
    return text.substr(begin, end - begin);
  }
  bool IsWordLike() const {
    return type == Type::kWord || type == Type::kAcronym;
  }
};

std::vector<Token> Tokenize(std::string_view text);

}  // namespace frostkit

#endif  // FROSTKIT_TEXT_H_
