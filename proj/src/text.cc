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

#include "frostkit/text.h"

namespace frostkit {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

bool IsLetter(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  return cp >= 0xC0 && cp <= 0x24F && cp != 0xD7 && cp != 0xF7;
}

bool IsUpperLetter(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  return cp >= 0xC0 && cp <= 0xDE && cp != 0xD7;
}

char32_t ToLowerLetter(char32_t cp) {
  return IsUpperLetter(cp) ? cp + 0x20 : cp;
}

size_t DecodeUtf8(std::string_view text, size_t pos, char32_t *cp) {
  const auto byte = [&](size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  unsigned char lead = byte(pos);
  if (lead < 0x80) {
    *cp = lead;
    return 1;
  }
  size_t len;
  char32_t value;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    value = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    value = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    value = lead & 0x07;
  } else {
    *cp = 0xFFFD;
    return 1;
  }
  if (pos + len > text.size()) {
    *cp = 0xFFFD;
    return 1;
  }
  for (size_t i = 1; i < len; ++i) {
    unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) {
      *cp = 0xFFFD;
      return 1;
    }
    value = (value << 6) | (c & 0x3F);
  }
  *cp = value;
  return len;
}

void AppendUtf8(char32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string FoldCase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    size_t len = DecodeUtf8(text, pos, &cp);
    if (cp == 0xFFFD && len == 1) {
      // Keep undecodable bytes as they are.
      out.push_back(text[pos]);
    } else if (IsUpperLetter(cp)) {
      AppendUtf8(ToLowerLetter(cp), &out);
    } else {
      out.append(text.substr(pos, len));
    }
    pos += len;
  }
  return out;
}

bool StartsUpper(std::string_view word) {
  if (word.empty()) return false;
  char32_t cp;
  DecodeUtf8(word, 0, &cp);
  return IsUpperLetter(cp);
}

std::string_view Trim(std::string_view text) {
  size_t b = 0;
  size_t e = text.size();
  while (b < e && IsAsciiSpace(text[b])) ++b;
  while (e > b && IsAsciiSpace(text[e - 1])) --e;
  return text.substr(b, e - b);
}

std::vector<std::string_view> SplitWhitespace(std::string_view text) {
  std::vector<std::string_view> parts;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !IsAsciiSpace(text[i])) ++i;
    if (i > start) parts.push_back(text.substr(start, i - start));
  }
  return parts;
}

namespace {

bool LetterAt(std::string_view text, size_t pos, size_t *len) {
  if (pos >= text.size()) return false;
  char32_t cp;
  *len = DecodeUtf8(text, pos, &cp);
  return IsLetter(cp);
}

bool AsciiUpperAt(std::string_view text, size_t pos) {
  return pos < text.size() && text[pos] >= 'A' && text[pos] <= 'Z';
}

bool DigitAt(std::string_view text, size_t pos) {
  return pos < text.size() && IsAsciiDigit(text[pos]);
}

// Length of (?:[A-Z]\.){2,} at pos, or 0.
size_t MatchAcronym(std::string_view text, size_t pos) {
  size_t p = pos;
  int pairs = 0;
  while (AsciiUpperAt(text, p) && p + 1 < text.size() && text[p + 1] == '.') {
    p += 2;
    ++pairs;
  }
  return pairs >= 2 ? p - pos : 0;
}

size_t MatchOrdinal(std::string_view text, size_t pos) {
  size_t p = pos;
  while (DigitAt(text, p)) ++p;
  if (p == pos || p + 2 > text.size()) return 0;
  std::string_view suffix = text.substr(p, 2);
  if (suffix != "st" && suffix != "nd" && suffix != "rd" && suffix != "th") {
    return 0;
  }
  size_t len;
  if (LetterAt(text, p + 2, &len)) return 0;
  return p + 2 - pos;
}

size_t MatchNumber(std::string_view text, size_t pos) {
  size_t p = pos;
  while (DigitAt(text, p)) ++p;
  if (p == pos) return 0;
  // Thousands groups: exactly three digits not followed by another digit.
  while (p < text.size() && text[p] == ',' && DigitAt(text, p + 1) &&
         DigitAt(text, p + 2) && DigitAt(text, p + 3) && !DigitAt(text, p + 4)) {
    p += 4;
  }
  if (p < text.size() && text[p] == '.' && DigitAt(text, p + 1)) {
    ++p;
    while (DigitAt(text, p)) ++p;
  }
  return p - pos;
}

size_t MatchWord(std::string_view text, size_t pos) {
  size_t p = pos;
  size_t len;
  while (LetterAt(text, p, &len)) p += len;
  if (p == pos) return 0;
  while (p < text.size() && text[p] == '\'' && LetterAt(text, p + 1, &len)) {
    // A lone trailing s after the apostrophe is a possessive clitic.
    if ((text[p + 1] == 's' || text[p + 1] == 'S') &&
        !LetterAt(text, p + 2, &len)) {
      break;
    }
    ++p;
    while (LetterAt(text, p, &len)) p += len;
  }
  return p - pos;
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    if (IsAsciiSpace(text[pos])) {
      ++pos;
      continue;
    }
    size_t len;
    Token::Type type;
    if ((len = MatchAcronym(text, pos)) > 0) {
      type = Token::Type::kAcronym;
    } else if ((len = MatchOrdinal(text, pos)) > 0) {
      type = Token::Type::kOrdinal;
    } else if ((len = MatchNumber(text, pos)) > 0) {
      type = Token::Type::kNumber;
    } else if ((len = MatchWord(text, pos)) > 0) {
      type = Token::Type::kWord;
    } else {
      char32_t cp;
      len = DecodeUtf8(text, pos, &cp);
      type = Token::Type::kPunct;
    }
    tokens.push_back(Token{type, pos, pos + len});
    pos += len;
  }
  return tokens;
}

}  // namespace frostkit
