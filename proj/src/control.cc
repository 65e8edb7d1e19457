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

#include "frostkit/control.h"

namespace frostkit {

TokenSequence::TokenSequence(std::string_view text, const MatchPolicy &policy)
    : raw_(Tokenize(text)) {
  tokens_.reserve(raw_.size());
  for (size_t i = 0; i < raw_.size(); ++i) {
    std::string_view v = raw_[i].View(text);
    tokens_.push_back(policy.case_fold ? FoldCase(v) : std::string(v));
    if (i + 1 < raw_.size()) {
      gaps_.emplace_back(text.substr(raw_[i].end, raw_[i + 1].begin - raw_[i].end));
    }
  }
}

SupportIndex::SupportIndex(std::string_view document,
                           const MatchPolicy &policy)
    : policy_(policy), doc_(document, policy) {}

bool SupportIndex::Supports(std::string_view entity) const {
  TokenSequence tokens(entity, policy_);
  return Supports(tokens, 0, tokens.size());
}

bool SupportIndex::Supports(const TokenSequence &entity, size_t begin,
                            size_t end) const {
  size_t k = end - begin;
  if (k == 0 || k > doc_.size()) return false;
  for (size_t i = 0; i + k <= doc_.size(); ++i) {
    bool match = true;
    for (size_t j = 0; j < k && match; ++j) {
      match = doc_.token(i + j) == entity.token(begin + j);
      if (match && j + 1 < k && !policy_.whitespace_collapse) {
        match = doc_.gap(i + j) == entity.gap(begin + j);
      }
    }
    if (match) return true;
  }
  return false;
}

bool EntitySupported(std::string_view entity, std::string_view document,
                     const MatchPolicy &policy) {
  return SupportIndex(document, policy).Supports(entity);
}

bool IsExtractiveChain(const EntityChain &chain, std::string_view document,
                       const MatchPolicy &policy) {
  SupportIndex index(document, policy);
  for (const EntityGroup &group : chain.groups) {
    for (const std::string &entity : group) {
      if (!index.Supports(entity)) return false;
    }
  }
  return true;
}

DropResult DropPrompt(const EntityChain &chain, std::string_view document,
                      const MatchPolicy &policy) {
  SupportIndex index(document, policy);
  DropResult result;
  for (const EntityGroup &group : chain.groups) {
    EntityGroup out;
    for (const std::string &entity : group) {
      TokenSequence tokens(entity, policy);
      const size_t n = tokens.size();
      if (index.Supports(tokens, 0, n)) {
        out.push_back(entity);
        result.report.kept.push_back(entity);
        continue;
      }
      // Longest first, then latest end.
      std::string retained;
      for (size_t len = n == 0 ? 0 : n - 1; len > 0 && retained.empty(); --len) {
        for (size_t b = n - len + 1; b-- > 0;) {
          if (tokens.raw(b).type == Token::Type::kPunct ||
              tokens.raw(b + len - 1).type == Token::Type::kPunct ||
              !index.Supports(tokens, b, b + len)) {
            continue;
          }
          size_t from = tokens.raw(b).begin;
          std::string candidate =
              entity.substr(from, tokens.raw(b + len - 1).end - from);
          // The cut may tokenize differently on its own.
          if (index.Supports(candidate)) {
            retained = std::move(candidate);
            break;
          }
        }
      }
      if (retained.empty()) {
        result.report.dropped.push_back(entity);
      } else {
        out.push_back(retained);
        result.report.partially_kept.emplace_back(entity, std::move(retained));
      }
    }
    result.chain.groups.push_back(std::move(out));
  }
  return result;
}

std::string MakePrompt(const EntityChain &chain) {
  std::string body = RenderChainBody(chain);
  std::string prompt(kChainMarker);
  if (!body.empty()) {
    prompt += ' ';
    prompt += body;
  }
  prompt += ' ';
  prompt += kSummaryMarker;
  return prompt;
}

EntityChain OracleChain(std::string_view reference, const KindSet &kinds,
                        const NamedEntityRecognizer &recognizer,
                        const RecordContext &context) {
  return BuildChain(Annotate(reference, kinds, recognizer, context));
}

FilterDecision ClassifyExtractive(std::string_view document,
                                  std::string_view summary,
                                  const KindSet &kinds,
                                  const NamedEntityRecognizer &recognizer,
                                  const MatchPolicy &policy,
                                  const RecordContext &context) {
  FilterDecision decision;
  decision.chain = OracleChain(summary, kinds, recognizer, context);
  SupportIndex index(document, policy);
  for (const EntityGroup &group : decision.chain.groups) {
    for (const std::string &entity : group) {
      if (!index.Supports(entity)) decision.unsupported.push_back(entity);
    }
  }
  decision.kept = decision.unsupported.empty();
  return decision;
}

}  // namespace frostkit
