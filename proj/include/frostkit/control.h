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

// Chain control: grounding entities in a source document, filtering
// datasets down to extractive chains and rewriting predicted chains so
// that every entity is supported (drop-prompt).
//
// An entity is supported by a document if its token sequence occurs as a
// contiguous subsequence of the document's tokens. Tokens come from
// Tokenize(), so "art" is not found in "party".

#ifndef FROSTKIT_CONTROL_H_
#define FROSTKIT_CONTROL_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frostkit/annotate.h"
#include "frostkit/chain.h"
#include "frostkit/entity.h"
#include "frostkit/recognizer.h"
#include "frostkit/text.h"

namespace frostkit {

struct MatchPolicy {
  // Compare tokens case-insensitively.
  bool case_fold = true;
  // Ignore the whitespace between tokens. When off, the bytes between
  // consecutive entity tokens must equal those between the matched
  // document tokens.
  bool whitespace_collapse = true;

  bool operator==(const MatchPolicy &other) const = default;
};

// Tokenized text prepared for matching.
class TokenSequence {
 public:
  TokenSequence(std::string_view text, const MatchPolicy &policy);

  size_t size() const { return tokens_.size(); }
  const std::string &token(size_t i) const { return tokens_[i]; }
  const std::string &gap(size_t i) const { return gaps_[i]; }
  const Token &raw(size_t i) const { return raw_[i]; }

 private:
  std::vector<Token> raw_;
  std::vector<std::string> tokens_;
  // gaps_[i] separates token i from token i+1.
  std::vector<std::string> gaps_;
};

// A document indexed for repeated support queries.
class SupportIndex {
 public:
  SupportIndex(std::string_view document, const MatchPolicy &policy);

  bool Supports(std::string_view entity) const;
  // Tokens [begin, end) of `entity` occur contiguously in the document.
  bool Supports(const TokenSequence &entity, size_t begin, size_t end) const;

  const MatchPolicy &policy() const { return policy_; }

 private:
  MatchPolicy policy_;
  TokenSequence doc_;
};

bool EntitySupported(std::string_view entity, std::string_view document,
                     const MatchPolicy &policy = {});

bool IsExtractiveChain(const EntityChain &chain, std::string_view document,
                       const MatchPolicy &policy = {});

struct DropReport {
  std::vector<std::string> kept;
  std::vector<std::string> dropped;
  // (original, retained) pairs.
  std::vector<std::pair<std::string, std::string>> partially_kept;
};

struct DropResult {
  EntityChain chain;
  DropReport report;
};

// Keeps supported entities verbatim. An unsupported entity is cut down to
// its longest supported contiguous token run (ties go to the run ending
// latest; runs start and end on non-punctuation tokens) or dropped if no
// token is supported. Groups are kept even when they end up empty.
DropResult DropPrompt(const EntityChain &chain, std::string_view document,
                      const MatchPolicy &policy = {});

// Forced decoder prefix "[ENTITYCHAIN] ... [SUMMARY]".
std::string MakePrompt(const EntityChain &chain);

EntityChain OracleChain(std::string_view reference, const KindSet &kinds,
                        const NamedEntityRecognizer &recognizer,
                        const RecordContext &context = {});

// Outcome of the extractiveness filter for one record.
struct FilterDecision {
  bool kept = false;
  EntityChain chain;
  std::vector<std::string> unsupported;
  // Set for records rejected because they could not be processed.
  std::string error;
};

// Annotates `summary` and tests its chain against `document`.
FilterDecision ClassifyExtractive(std::string_view document,
                                  std::string_view summary,
                                  const KindSet &kinds,
                                  const NamedEntityRecognizer &recognizer,
                                  const MatchPolicy &policy,
                                  const RecordContext &context = {});

}  // namespace frostkit

#endif  // FROSTKIT_CONTROL_H_
