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

#include "frostkit/sentences.h"

#include <algorithm>
#include <array>

#include "frostkit/text.h"

namespace frostkit {
namespace {

constexpr std::array<std::string_view, 25> kAbbreviations = {
    "Dr.",   "Mr.",  "Mrs.", "Ms.",  "Prof.", "St.",  "No.",  "Mt.",  "Jr.",
    "Sr.",   "Gen.", "Col.", "Lt.",  "Capt.", "Sgt.", "Sen.", "Rep.", "Gov.",
    "Rev.",  "Hon.", "vs.",  "e.g.", "i.e.",  "Fig.", "approx.",
};

// Closing and opening punctuation that may wrap a sentence edge.
constexpr std::string_view kRightDoubleQuote = "\xE2\x80\x9D";
constexpr std::string_view kRightSingleQuote = "\xE2\x80\x99";
constexpr std::string_view kLeftDoubleQuote = "\xE2\x80\x9C";
constexpr std::string_view kLeftSingleQuote = "\xE2\x80\x98";

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Length of a closing quote/bracket ending right before `pos`, or 0.
size_t ClosingBefore(std::string_view text, size_t pos) {
  if (pos == 0) return 0;
  char c = text[pos - 1];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  if (pos >= 3) {
    std::string_view tail = text.substr(pos - 3, 3);
    if (tail == kRightDoubleQuote || tail == kRightSingleQuote) return 3;
  }
  return 0;
}

// Length of an opening quote/bracket starting at `pos`, or 0.
size_t OpeningAt(std::string_view text, size_t pos) {
  char c = text[pos];
  if (c == '"' || c == '\'' || c == '(' || c == '[') return 1;
  std::string_view head = text.substr(pos, 3);
  if (head == kLeftDoubleQuote || head == kLeftSingleQuote) return 3;
  return 0;
}

bool StartsSentence(std::string_view text, size_t pos) {
  if (IsAsciiDigit(text[pos])) return true;
  if (OpeningAt(text, pos) > 0) return true;
  return StartsUpper(text.substr(pos));
}

bool IsInitials(std::string_view word) {
  if (word.size() < 2 || word.size() % 2 != 0) return false;
  for (size_t i = 0; i < word.size(); i += 2) {
    if (word[i] < 'A' || word[i] > 'Z' || word[i + 1] != '.') return false;
  }
  return true;
}

// True if the whitespace run [ws_begin, ws_end) ends a sentence.
bool IsBoundary(std::string_view text, size_t ws_begin, size_t ws_end) {
  int newlines = 0;
  for (size_t i = ws_begin; i < ws_end; ++i) {
    if (text[i] == '\n') ++newlines;
  }
  if (newlines >= 2) return true;

  size_t p = ws_begin;
  bool closed = false;
  while (size_t len = ClosingBefore(text, p)) {
    p -= len;
    closed = true;
  }
  if (p == 0 || !IsTerminator(text[p - 1])) return false;
  size_t q = p;
  while (q > 0 && IsTerminator(text[q - 1])) --q;
  if (!StartsSentence(text, ws_end)) return false;

  if (!closed && p - q == 1 && text[p - 1] == '.') {
    size_t w = q;
    while (w > 0 && !IsAsciiSpace(text[w - 1])) --w;
    while (w < p) {
      size_t len = OpeningAt(text, w);
      if (len == 0) break;
      w += len;
    }
    if (IsAbbreviation(text.substr(w, p - w))) return false;
  }
  return true;
}

}  // namespace

bool IsAbbreviation(std::string_view word) {
  if (IsInitials(word)) return true;
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

std::vector<SentenceRange> SegmentSentences(std::string_view text) {
  std::vector<SentenceRange> sentences;
  auto emit = [&](size_t begin, size_t end) {
    while (begin < end && IsAsciiSpace(text[begin])) ++begin;
    while (end > begin && IsAsciiSpace(text[end - 1])) --end;
    if (end > begin) sentences.push_back({begin, end});
  };

  size_t sentence_begin = 0;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsAsciiSpace(text[i])) {
      ++i;
      continue;
    }
    size_t ws_begin = i;
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    if (ws_begin > 0 && i < text.size() && IsBoundary(text, ws_begin, i)) {
      emit(sentence_begin, ws_begin);
      sentence_begin = i;
    }
  }
  emit(sentence_begin, text.size());
  return sentences;
}

}  // namespace frostkit
