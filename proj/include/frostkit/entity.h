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

// Core annotation types shared by every module.

#ifndef FROSTKIT_ENTITY_H_
#define FROSTKIT_ENTITY_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frostkit {

// Base class for all data errors raised by the library.
class FrostError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pass-through or external recognition was requested but the record has no
// annotations.
class MissingAnnotations : public FrostError {
 public:
  using FrostError::FrostError;
};

// A supplied span does not match the text it claims to annotate.
class InvalidAnnotation : public FrostError {
 public:
  using FrostError::FrostError;
};

// An entity string cannot be serialized into a chain.
class InvalidEntity : public FrostError {
 public:
  using FrostError::FrostError;
};

// A summary contains marker tokens.
class InvalidSummary : public FrostError {
 public:
  using FrostError::FrostError;
};

enum class EntityKind { kNamed, kDate, kNumber };

// Lower-case wire names: "named", "date", "number".
std::string_view KindName(EntityKind kind);
std::optional<EntityKind> ParseKind(std::string_view name);

// Precedence used for overlap resolution; lower ranks win.
int KindRank(EntityKind kind);

// Subset of entity kinds enabled for a run.
class KindSet {
 public:
  KindSet() = default;
  static KindSet All();
  // Parses a comma-separated list such as "named,date,number".
  // Throws std::invalid_argument on unknown names or an empty list.
  static KindSet Parse(std::string_view spec);

  void Insert(EntityKind kind) { bits_ |= Bit(kind); }
  bool Contains(EntityKind kind) const { return (bits_ & Bit(kind)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::vector<EntityKind> Kinds() const;
  std::string ToString() const;

  bool operator==(const KindSet &other) const = default;

 private:
  static unsigned Bit(EntityKind kind) {
    return 1u << static_cast<unsigned>(kind);
  }
  unsigned bits_ = 0;
};

struct EntitySpan {
  std::string text;
  EntityKind kind = EntityKind::kNamed;
  size_t start = 0;  // byte offset, inclusive
  size_t end = 0;    // byte offset, exclusive
  int sent = 0;

  size_t length() const { return end - start; }
  bool Overlaps(const EntitySpan &other) const {
    return start < other.end && other.start < end;
  }
  bool operator==(const EntitySpan &other) const = default;
};

struct SentenceRange {
  size_t start = 0;
  size_t end = 0;

  bool operator==(const SentenceRange &other) const = default;
};

struct AnnotatedText {
  std::string text;
  std::vector<SentenceRange> sentences;
  std::vector<EntitySpan> spans;

  std::string_view Sentence(size_t i) const {
    return std::string_view(text).substr(sentences[i].start,
                                         sentences[i].end - sentences[i].start);
  }
};

}  // namespace frostkit

#endif  // FROSTKIT_ENTITY_H_
