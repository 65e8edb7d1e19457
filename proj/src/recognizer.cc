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

#include "frostkit/recognizer.h"

#include <algorithm>
#include <array>
#include <fstream>

#include "frostkit/grammar.h"
#include "frostkit/record.h"
#include "frostkit/text.h"

namespace frostkit {
namespace {

constexpr std::array<std::string_view, 7> kConnectors = {
    "of", "de", "van", "von", "der", "del", "da"};

const std::unordered_set<std::string_view> &Stopwords() {
  static const auto *words = new std::unordered_set<std::string_view>{
      "a",       "an",      "the",     "this",    "that",     "these",
      "those",   "he",      "she",     "it",      "they",     "we",
      "i",       "you",     "his",     "her",     "its",      "their",
      "our",     "my",      "your",    "him",     "them",     "us",
      "me",      "in",      "on",      "at",      "for",      "from",
      "by",      "with",    "to",      "of",      "and",      "but",
      "or",      "nor",     "if",      "when",    "while",    "after",
      "before",  "as",      "is",      "was",     "are",      "were",
      "be",      "been",    "there",   "here",    "what",     "which",
      "who",     "whom",    "whose",   "where",   "why",      "how",
      "not",     "no",      "yes",     "so",      "then",     "than",
      "also",    "however", "although", "though", "since",    "because",
      "during",  "under",   "over",    "about",   "into",     "some",
      "many",    "most",    "all",     "both",    "each",     "every",
      "any",     "other",   "such",    "mr",      "mrs",      "ms",
      "dr",      "prof",    "sir",     "yesterday", "today",  "tomorrow",
      "last",    "next",    "meanwhile", "now",   "according",
  };
  return *words;
}

bool IsConnector(std::string_view word) {
  return std::find(kConnectors.begin(), kConnectors.end(), word) !=
         kConnectors.end();
}

// Whitespace gap that does not span a blank line.
bool IsRunGap(std::string_view gap) {
  if (gap.empty() || !Trim(gap).empty()) return false;
  return std::count(gap.begin(), gap.end(), '\n') < 2;
}

}  // namespace

std::vector<EntitySpan> PlaceSuppliedSpans(
    std::string_view text, const std::vector<SuppliedSpan> &supplied) {
  std::vector<EntitySpan> spans;
  spans.reserve(supplied.size());
  size_t cursor = 0;
  for (const SuppliedSpan &s : supplied) {
    EntitySpan span;
    span.text = s.text;
    span.kind = s.kind;
    if (s.text.empty() || Trim(s.text).size() != s.text.size()) {
      throw InvalidAnnotation("entity \"" + s.text +
                              "\" is empty or padded with whitespace");
    }
    if (s.start && s.end) {
      if (*s.start >= *s.end || *s.end > text.size() ||
          text.substr(*s.start, *s.end - *s.start) != s.text) {
        throw InvalidAnnotation("span \"" + s.text + "\" [" +
                                std::to_string(*s.start) + "," +
                                std::to_string(*s.end) +
                                ") does not match the text");
      }
      span.start = *s.start;
      span.end = *s.end;
    } else {
      size_t found = text.find(s.text, cursor);
      if (found == std::string_view::npos) found = text.find(s.text);
      if (found == std::string_view::npos) {
        throw InvalidAnnotation("span \"" + s.text + "\" not found in text");
      }
      span.start = found;
      span.end = found + s.text.size();
    }
    cursor = span.end;
    spans.push_back(std::move(span));
  }
  return spans;
}

std::vector<EntitySpan> PassThroughRecognizer::Recognize(
    const RecognizeRequest &request) const {
  if (request.supplied == nullptr) {
    throw MissingAnnotations("record " + std::string(request.record_id) +
                             " carries no entity annotations");
  }
  return PlaceSuppliedSpans(request.text, *request.supplied);
}

HeuristicRecognizer::HeuristicRecognizer(std::vector<std::string> gazetteer) {
  for (const std::string &entry : gazetteer) {
    std::vector<std::string> tokens;
    for (const Token &t : Tokenize(entry)) {
      tokens.emplace_back(t.View(entry));
    }
    if (!tokens.empty()) gazetteer_.push_back(std::move(tokens));
  }
}

bool HeuristicRecognizer::IsStopword(std::string_view lowercase_word) {
  return Stopwords().count(lowercase_word) > 0;
}

std::vector<EntitySpan> HeuristicRecognizer::Recognize(
    const RecognizeRequest &request) const {
  std::string_view text = request.text;
  std::vector<Token> tokens = Tokenize(text);
  const size_t n = tokens.size();

  std::vector<bool> capitalized(n, false);
  for (size_t i = 0; i < n; ++i) {
    std::string_view v = tokens[i].View(text);
    capitalized[i] = tokens[i].IsWordLike() && StartsUpper(v) &&
                     !IsStopword(FoldCase(v));
  }
  auto gap = [&](size_t a, size_t b) {
    return text.substr(tokens[a].end, tokens[b].begin - tokens[a].end);
  };
  auto is_hyphen = [&](size_t i) {
    return tokens[i].type == Token::Type::kPunct && tokens[i].View(text) == "-";
  };

  std::vector<EntitySpan> spans;
  auto emit = [&](size_t first, size_t last) {
    EntitySpan span;
    span.start = tokens[first].begin;
    span.end = tokens[last].end;
    span.text = std::string(text.substr(span.start, span.end - span.start));
    span.kind = EntityKind::kNamed;
    spans.push_back(std::move(span));
  };

  size_t i = 0;
  while (i < n) {
    if (!capitalized[i]) {
      ++i;
      continue;
    }
    size_t last = i;
    bool temporal_only = IsTemporalWord(tokens[i].View(text));
    while (last + 1 < n) {
      size_t k = last + 1;
      size_t next_cap;
      if (capitalized[k] && IsRunGap(gap(last, k))) {
        next_cap = k;
      } else if (k + 1 < n && is_hyphen(k) && gap(last, k).empty() &&
                 gap(k, k + 1).empty() && capitalized[k + 1]) {
        next_cap = k + 1;
      } else if (k + 1 < n && tokens[k].type == Token::Type::kWord &&
                 IsConnector(tokens[k].View(text)) &&
                 IsRunGap(gap(last, k)) && IsRunGap(gap(k, k + 1)) &&
                 capitalized[k + 1]) {
        next_cap = k + 1;
      } else {
        break;
      }
      temporal_only =
          temporal_only && IsTemporalWord(tokens[next_cap].View(text));
      last = next_cap;
    }
    if (!temporal_only) emit(i, last);
    i = last + 1;
  }

  for (const auto &entry : gazetteer_) {
    if (entry.size() > n) continue;
    for (size_t start = 0; start + entry.size() <= n; ++start) {
      bool match = true;
      for (size_t j = 0; j < entry.size() && match; ++j) {
        match = tokens[start + j].View(text) == entry[j];
      }
      if (match) emit(start, start + entry.size() - 1);
    }
  }
  return spans;
}

ExternalRecognizer::ExternalRecognizer(
    std::unordered_map<std::string, FieldSpans> by_id)
    : by_id_(std::move(by_id)) {}

ExternalRecognizer ExternalRecognizer::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FrostError("cannot open entity side file " + path);
  std::unordered_map<std::string, FieldSpans> by_id;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      Json j = Json::parse(line);
      if (IsMetaLine(j)) continue;
      if (!j.is_object() || !j.contains("id") || !j.contains("entities")) {
        throw DataError("expected \"id\" and \"entities\"");
      }
      by_id[IdToString(j["id"])] = FieldSpansFromJson(j["entities"]);
    } catch (const std::exception &e) {
      throw FrostError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return ExternalRecognizer(std::move(by_id));
}

std::vector<EntitySpan> ExternalRecognizer::Recognize(
    const RecognizeRequest &request) const {
  auto it = by_id_.find(std::string(request.record_id));
  if (it != by_id_.end()) {
    auto field = it->second.find(std::string(request.field));
    if (field != it->second.end()) {
      return PlaceSuppliedSpans(request.text, field->second);
    }
  }
  throw MissingAnnotations("side file has no " + std::string(request.field) +
                           " entities for record " +
                           std::string(request.record_id));
}

std::vector<std::string> LoadGazetteer(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FrostError("cannot open gazetteer " + path);
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view entry = Trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    entries.emplace_back(entry);
  }
  return entries;
}

}  // namespace frostkit
