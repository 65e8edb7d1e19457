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

#ifndef FROSTKIT_RECOGNIZER_H_
#define FROSTKIT_RECOGNIZER_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "frostkit/entity.h"

namespace frostkit {

// Annotation request for one text. `supplied` carries the record's own
// pre-annotated spans, when it has any; offsets may be missing (-1) in
// which case the span is located by its text.
struct SuppliedSpan {
  std::string text;
  EntityKind kind = EntityKind::kNamed;
  std::optional<size_t> start;
  std::optional<size_t> end;
};

struct RecognizeRequest {
  std::string_view text;
  std::string_view record_id;
  // Record field the text comes from ("document", "summary", "predicted").
  std::string_view field;
  const std::vector<SuppliedSpan> *supplied = nullptr;
};

// Source of entity spans. Implementations must be safe to call
// concurrently.
class NamedEntityRecognizer {
 public:
  virtual ~NamedEntityRecognizer() = default;

  // Returns candidate spans; they may overlap and need not be sorted.
  virtual std::vector<EntitySpan> Recognize(
      const RecognizeRequest &request) const = 0;

  // Authoritative recognizers return complete gold annotations of every
  // kind, so the date and number grammars are not run on top of them.
  virtual bool authoritative() const = 0;

  virtual std::string_view name() const = 0;
};

// Resolves supplied spans against `text`: validates offsets, or finds the
// first occurrence at or after the previous span when offsets are absent.
// Throws InvalidAnnotation when a span cannot be placed.
std::vector<EntitySpan> PlaceSuppliedSpans(
    std::string_view text, const std::vector<SuppliedSpan> &supplied);

// Returns the record's supplied spans verbatim.
class PassThroughRecognizer : public NamedEntityRecognizer {
 public:
  std::vector<EntitySpan> Recognize(
      const RecognizeRequest &request) const override;
  bool authoritative() const override { return true; }
  std::string_view name() const override { return "passthrough"; }
};

// Capitalized-span heuristic.
//
// A candidate is a maximal run of capitalized word tokens joined by
// whitespace (no blank line), by an adjacent hyphen ("Coca-Cola"), or by
// the lower-case connectors of/de/van/von/der/del/da between two
// capitalized tokens. Capitalized tokens whose lower-case form is a
// stopword (determiners, pronouns, prepositions, conjunctions, honorifics)
// never join a run. Runs consisting only of month/weekday names are left
// to the date grammar. Gazetteer entries are matched case-sensitively as
// token sequences; overlaps are resolved later (longest, then leftmost).
class HeuristicRecognizer : public NamedEntityRecognizer {
 public:
  HeuristicRecognizer() = default;
  explicit HeuristicRecognizer(std::vector<std::string> gazetteer);

  std::vector<EntitySpan> Recognize(
      const RecognizeRequest &request) const override;
  bool authoritative() const override { return false; }
  std::string_view name() const override { return "heuristic"; }

  size_t gazetteer_size() const { return gazetteer_.size(); }

  static bool IsStopword(std::string_view lowercase_word);

 private:
  // Each entry is the token list of one gazetteer surface form.
  std::vector<std::vector<std::string>> gazetteer_;
};

// Reads pre-computed spans from a JSON Lines side file keyed by record id:
//   {"id": "...", "entities": [{"text", "kind", "start", "end"}, ...]}
// Spans per record field, e.g. {"summary": [...], "document": [...]}.
using FieldSpans = std::unordered_map<std::string, std::vector<SuppliedSpan>>;

class ExternalRecognizer : public NamedEntityRecognizer {
 public:
  explicit ExternalRecognizer(std::unordered_map<std::string, FieldSpans> by_id);
  static ExternalRecognizer FromFile(const std::string &path);

  std::vector<EntitySpan> Recognize(
      const RecognizeRequest &request) const override;
  bool authoritative() const override { return true; }
  std::string_view name() const override { return "external"; }

  size_t size() const { return by_id_.size(); }

 private:
  std::unordered_map<std::string, FieldSpans> by_id_;
};

// One surface form per line; blank lines and '#' comments are skipped.
std::vector<std::string> LoadGazetteer(const std::string &path);

}  // namespace frostkit

#endif  // FROSTKIT_RECOGNIZER_H_
