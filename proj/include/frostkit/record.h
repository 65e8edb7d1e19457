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

// JSON Lines records. A record looks like
//
//   {"id": "17", "document": "...", "summary": "...", "predicted": "...",
//    "entities": {"summary": [{"text": "Walsall", "kind": "named",
//                              "start": 0, "end": 7}, ...]}}
//
// "entities" maps a text field to its pre-annotated spans; a bare array is
// shorthand for the summary. Offsets are optional, spans without them are
// located by searching for their text. Lines holding a "_meta" key are
// run headers and are skipped by readers.

#ifndef FROSTKIT_RECORD_H_
#define FROSTKIT_RECORD_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "frostkit/chain.h"
#include "frostkit/entity.h"
#include "frostkit/recognizer.h"
#include "json.hpp"

namespace frostkit {

using Json = nlohmann::ordered_json;

// Malformed input record.
class DataError : public FrostError {
 public:
  using FrostError::FrostError;
};

// Accepts string or integer ids.
std::string IdToString(const Json &id);

std::vector<SuppliedSpan> SuppliedSpansFromJson(const Json &spans);
FieldSpans FieldSpansFromJson(const Json &entities);
Json SpansToJson(const std::vector<EntitySpan> &spans);

Json ChainToJson(const EntityChain &chain);
EntityChain ChainFromJson(const Json &json);

bool IsMetaLine(const Json &json);

struct DatasetRecord {
  std::string id;
  std::optional<std::string> document;
  std::optional<std::string> summary;
  std::optional<std::string> predicted;
  FieldSpans entities;
  bool has_entities = false;
  // The parsed line, so writers can pass unknown fields through.
  Json raw;

  // Spans supplied for `field`, or null.
  const std::vector<SuppliedSpan> *EntitiesFor(std::string_view field) const;

  // Returns the field or throws DataError naming the record.
  const std::string &Require(std::string_view field) const;
};

// Throws DataError on a missing id or wrongly typed fields.
DatasetRecord RecordFromJson(Json json);

// One non-blank line of a JSON Lines stream.
struct JsonlLine {
  size_t line_no = 0;
  Json value;
  // Set when the line is not valid JSON; `value` is then null.
  std::string error;
};

class JsonlReader {
 public:
  JsonlReader(std::istream *in, std::string name);

  // Reads the next non-blank, non-header line. Returns false at the end.
  bool Next(JsonlLine *line);

  const std::string &name() const { return name_; }
  // Header object of the stream, if it had one.
  const Json &meta() const { return meta_; }

 private:
  std::istream *in_;
  std::string name_;
  size_t line_no_ = 0;
  Json meta_;
};

// Writes `json` as one line. Invalid UTF-8 is replaced, never rejected.
void WriteJsonLine(const Json &json, std::ostream *out);
std::string DumpJson(const Json &json);

}  // namespace frostkit

#endif  // FROSTKIT_RECORD_H_
