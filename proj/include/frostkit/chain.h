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

// Entity chains and the augmented target format
//
//   [ENTITYCHAIN] e1 | e2 ||| e3 [SUMMARY] summary text
//
// Summary-level targets carry one chain for the whole summary with
// sentence groups separated by "|||". Sentence-level targets alternate a
// chain block and a summary block per sentence:
//
//   [ENTITYCHAIN] e1 | e2 [SUMMARY] s1 [ENTITYCHAIN] e3 [SUMMARY] s2
//
// Emitted layout is canonical: single spaces around markers and
// separators, empty groups as empty slots ("e1 ||| ||| e3"), an empty
// chain as "[ENTITYCHAIN] [SUMMARY] ...". Parsing is case-insensitive on
// markers and never throws.

#ifndef FROSTKIT_CHAIN_H_
#define FROSTKIT_CHAIN_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frostkit/entity.h"

namespace frostkit {

inline constexpr std::string_view kChainMarker = "[ENTITYCHAIN]";
inline constexpr std::string_view kSummaryMarker = "[SUMMARY]";
inline constexpr std::string_view kEntitySeparator = "|";
inline constexpr std::string_view kSentenceSeparator = "|||";

using EntityGroup = std::vector<std::string>;

struct EntityChain {
  std::vector<EntityGroup> groups;

  size_t EntityCount() const;
  // True when no group holds an entity.
  bool empty() const { return EntityCount() == 0; }
  std::vector<std::string> Flatten() const;

  bool operator==(const EntityChain &other) const = default;
};

enum class PlanLevel { kSummary, kSentence };

std::string_view PlanLevelName(PlanLevel level);

struct AugmentedTarget {
  EntityChain chain;
  std::string summary;
  PlanLevel level = PlanLevel::kSummary;

  bool operator==(const AugmentedTarget &other) const = default;
};

struct SentenceLevelTarget {
  std::vector<std::pair<EntityGroup, std::string>> pairs;

  bool operator==(const SentenceLevelTarget &other) const = default;
};

// One group per sentence, spans in document order, surface forms verbatim.
EntityChain BuildChain(const AnnotatedText &summary);

// Pairs each sentence of `summary` with its group.
SentenceLevelTarget BuildSentenceLevelTarget(const AnnotatedText &summary);

// Throws InvalidEntity if `entity` is empty, padded with whitespace,
// contains '|' or a marker token.
void ValidateEntity(std::string_view entity);

// True if `text` contains a marker token in any casing.
bool ContainsMarker(std::string_view text);

// Chain body without markers, e.g. "Frozen | Disney ||| Kristoff".
std::string RenderChainBody(const EntityChain &chain);

// Throws InvalidEntity / InvalidSummary. The summary is trimmed.
std::string SerializeSummaryLevel(const AugmentedTarget &target);
std::string SerializeSentenceLevel(const SentenceLevelTarget &target);

// Result of parsing arbitrary (possibly malformed) model output.
struct ParsedTarget {
  PlanLevel level = PlanLevel::kSummary;
  EntityChain chain;
  // Text of each summary block, in order.
  std::vector<std::string> segments;
  // Non-empty segments joined by single spaces.
  std::string summary;
  bool malformed = false;

  AugmentedTarget ToAugmented() const;
  SentenceLevelTarget ToSentenceLevel() const;
};

// Recovery policy for malformed input:
//   - no [SUMMARY] marker: the whole (trimmed) string is the summary and
//     the chain is empty;
//   - [SUMMARY] without a preceding [ENTITYCHAIN]: the text before the
//     marker is parsed as the chain body;
//   - any other deviation (leading text, repeated or dangling markers,
//     empty entities) is parsed best-effort.
// Every recovery sets `malformed`.
ParsedTarget ParseAugmented(std::string_view text);

// Summary text of `text` with any chain removed.
std::string StripChain(std::string_view text);

}  // namespace frostkit

#endif  // FROSTKIT_CHAIN_H_
